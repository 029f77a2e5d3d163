import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name="causgen",
    version="0.1.0",
    description="Benchmark generator for causal reasoning of language models.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["tests"]),
    package_data={"causgen": ["data/*.txt", "data/*.cfg"]},
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
        "Operating System :: OS Independent",
    ],
    python_requires='>=3.8',
    install_requires=['numpy', 'pandas', 'seaborn', 'matplotlib', 'networkx', 'httpx'],
    entry_points={"console_scripts": ["causgen=causgen.cli:main"]},
    include_package_data=True,
)
