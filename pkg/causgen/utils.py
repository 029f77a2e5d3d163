################################################################################
# Utils                                                                        #
#                                                                              #
"""Here popular basic methods are noted."""
################################################################################


import os
import time
import pickle
import hashlib

import numpy as np


def mkdirp(directory):
    """Create directory if it does not exist.

    Parameters
    ----------
    directory : string
        Directory name
    """
    if not os.path.exists(directory):
        os.makedirs(directory)


def tic():
    """MATLAB tic replica - return current time.

    Returns
    -------
    time : float
        Current time in seconds
    """
    return time.time()


def toc(t, message="", is_print=True):
    """MATLAB toc replica - return time difference to tic and alternatively
    print a message.

    Parameters
    ----------
    t : float
        Starting time - given by tic function
    message : string, optional
        Custom output message
    is_print : bool, optional
        True for printing an output message

    Returns
    -------
    time : float
        Time difference
    """
    if message:
        message += " - runtime = "

    t_diff = time.time()-t

    if is_print:
        print(message+"%6.3f" % t_diff+" s")

    return t_diff


def save(obj, link):
    """Save an object using pickle in the specified link.

    Parameters
    ----------
    obj : Object
        Object to be saved
    link : string
        Specific link to save object
    """
    with open(link, "wb") as f:
        pickle.dump(obj, f)


def load(link):
    """Load pickled object from the specified folder.

    Parameters
    ----------
    link : string
        Specific link to load object

    Returns
    -------
    obj : Object
        Loaded object
    """
    with open(link, 'rb') as f:
        return pickle.load(f)


def rng(seed, *keys):
    """Return the random generator of a child stream.

    Every consumer of randomness owns a stream addressed by the seed and a
    tuple of non-negative integer keys. The keys are used as the spawn key
    of a :class:`numpy.random.SeedSequence`, so that streams are
    independent of each other and of the order they are requested in

    .. math::

        \\text{stream}(s, k_1,\\dots,k_n)=\\text{PCG64}\\left(\\text{SeedSequence}(s, [k_1,\\dots,k_n])\\right).

    Parameters
    ----------
    seed : integer
        Seed of the parent stream, reduced to 64 bit
    keys : integer
        Child stream address

    Returns
    -------
    gen : Generator
        Numpy random generator
    """
    seq = np.random.SeedSequence(int(seed) & 0xFFFFFFFFFFFFFFFF, spawn_key=tuple(int(k) for k in keys))
    return np.random.Generator(np.random.PCG64(seq))


def derive_seed(seed, *keys):
    """Derive a 63 bit child seed from a master seed.

    Parameters
    ----------
    seed : integer
        Master seed
    keys : integer
        Child address

    Returns
    -------
    seed : integer
        Derived seed
    """
    seq = np.random.SeedSequence(int(seed) & 0xFFFFFFFFFFFFFFFF, spawn_key=tuple(int(k) for k in keys))
    return int(seq.generate_state(1, dtype=np.uint64)[0] >> np.uint64(1))


def read_sections(link):
    """Read a text file grouped by ``[section]`` headers.

    Lines before the first header are ignored, as are lines starting with
    ``#``. Trailing whitespace is removed, inner blank lines are kept.

    Parameters
    ----------
    link : string
        File link

    Returns
    -------
    sections : dictionary
        Section name and list of lines
    """
    sections = {}
    current = None
    with open(link, "r", encoding="utf-8") as file_in:
        for line in file_in:
            line = line.rstrip()
            if line.startswith("#"):
                continue
            if line.startswith("[") and line.endswith("]"):
                current = line[1:-1].strip()
                sections[current] = []
            elif current is not None:
                sections[current].append(line)

    # Strip surrounding blank lines
    for name, lines in sections.items():
        while lines and not lines[0]:
            lines.pop(0)
        while lines and not lines[-1]:
            lines.pop()

    return sections


def sha256(link):
    """Return the hex digest of a file.

    Parameters
    ----------
    link : string
        File link

    Returns
    -------
    digest : string
        SHA-256 hex digest
    """
    h = hashlib.sha256()
    with open(link, "rb") as f:
        for block in iter(lambda: f.read(65536), b""):
            h.update(block)
    return h.hexdigest()


def sha256_text(text):
    """Return the hex digest of a text.

    Parameters
    ----------
    text : string
        Text, encoded as UTF-8

    Returns
    -------
    digest : string
        SHA-256 hex digest
    """
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def data_link(name):
    """Return the link to a bundled data file.

    Parameters
    ----------
    name : string
        File name in the package data folder

    Returns
    -------
    link : string
        Absolute file link
    """
    return os.path.join(os.path.dirname(os.path.abspath(__file__)), "data", name)
