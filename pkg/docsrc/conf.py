#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# CausGen documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir. The package must be installed for autodoc.

import sphinx_bootstrap_theme


# -- General configuration ------------------------------------------------

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.mathjax',
              'sphinx.ext.autosummary',
              'numpydoc']

# Generate the API documentation when building
autosummary_generate = True
numpydoc_show_class_members = False

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

# General information about the project.
project = 'CausGen'
copyright = '2026, CausGen developers'
author = 'CausGen developers'

# The short X.Y version and the full version.
version = '0.1'
release = '0.1.0'

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

pygments_style = 'sphinx'


# -- Options for HTML output ----------------------------------------------

html_theme = 'bootstrap'

html_theme_options = {
    'navbar_sidebarrel': False,
    'navbar_pagenav': True,
    'navbar_pagenav_name': "Page",
    'globaltoc_includehidden': "true",
    'navbar_class': "navbar",
    'navbar_fixed_top': "true",
    'source_link_position': "",
    'bootswatch_theme': "paper",
    'bootstrap_version': "3",
    'navbar_links': [("API", "api"), ("Benchmark", "benchmark"), ("Evaluation", "evaluation"), ],
}

html_theme_path = sphinx_bootstrap_theme.get_html_theme_path()
