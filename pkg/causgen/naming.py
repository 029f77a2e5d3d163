################################################################################
# Naming Module                                                                #
#                                                                              #
"""Unseen node names built from random tokens and subject terms."""
################################################################################


import string
import collections

import causgen.utils as utils


KINDS = ["random", "plain", "change"]
SUBJECTS = ["biology", "chemistry", "economics", "physics"]

NameStyle = collections.namedtuple("NameStyle", ["kind", "subject"])
NameStyle.__doc__ = """Naming style of a scenario.

Parameters
----------
kind : string
    ``random`` for the bare token, ``plain`` for token and term, ``change``
    for change indicator, token and term
subject : string
    Term subject, None for the ``random`` kind
"""


def parse_style(text):
    """Parse a style in ``random``, ``plain:chemistry`` or
    ``change:biology`` notation.

    Parameters
    ----------
    text : string, NameStyle
        Style notation

    Returns
    -------
    style : NameStyle
        Naming style
    """
    if isinstance(text, NameStyle):
        style = text
    else:
        kind, sep, subject = text.strip().partition(":")
        style = NameStyle(kind.strip(), subject.strip() or None)

    if style.kind not in KINDS:
        raise ValueError("Unknown name style "+repr(style.kind))
    if (style.kind == "random") != (style.subject is None):
        raise ValueError("A subject must be given for term styles only")
    if style.subject is not None and style.subject not in SUBJECTS:
        raise ValueError("Unknown subject "+repr(style.subject))
    return style


def style_tag(style):
    """Return the notation of a style.

    Parameters
    ----------
    style : NameStyle
        Naming style

    Returns
    -------
    tag : string
        Style notation
    """
    return style.kind if style.subject is None else style.kind+":"+style.subject


class Lexicon:
    """This class holds the subject terms and change indicators used to
    extend random tokens.

    The lexicon file groups one lowercase term per line under section
    headers ``[biology]``, ``[chemistry]``, ``[economics]``, ``[physics]``
    and ``[change]`` for the change indicators.

    Parameters
    ----------
    link : string, optional
        Link to lexicon file, the bundled lexicon is used by default
    """
    def __init__(self, link=""):
        sections = utils.read_sections(link if link else utils.data_link("lexicon.txt"))

        self._terms = {}
        for subject in SUBJECTS:
            terms = [x.strip() for x in sections.get(subject, []) if x.strip()]
            if not terms:
                raise ValueError("Lexicon has no terms for subject "+subject)
            self._terms[subject] = terms
        self._indicators = [x.strip() for x in sections.get("change", []) if x.strip()]
        if not self._indicators:
            raise ValueError("Lexicon has no change indicators")

        for word in [x for terms in self._terms.values() for x in terms]+self._indicators:
            if word != word.lower():
                raise ValueError("Lexicon entry "+repr(word)+" is not lowercase")


    ##################
    # Getter Methods #
    ##################
    def get_terms(self, subject):
        """Return the terms of a subject.

        Parameters
        ----------
        subject : string
            Subject name

        Returns
        -------
        terms : list
            Subject terms
        """
        return list(self._terms[subject])

    def get_indicators(self):
        """Return the change indicators.

        Returns
        -------
        indicators : list
            Change indicators
        """
        return list(self._indicators)


def random_token(gen, length=(8, 11)):
    """Draw a random lowercase token.

    Parameters
    ----------
    gen : Generator
        Random stream
    length : tuple, optional
        Minimal and maximal token length

    Returns
    -------
    token : string
        Random token such as ``thepxexqaac``
    """
    num = int(gen.integers(length[0], length[1]+1))
    return "".join(string.ascii_lowercase[i] for i in gen.integers(0, 26, num))


def assign_names(graph, style, lexicon, seed):
    """Assign a distinct unseen name to every node.

    * ``random`` - token, e.g. ``thepxexqaac``
    * ``plain`` - token and term, e.g. ``theghlfkaab decomposition``
    * ``change`` - indicator, token and term, e.g. ``decrease of ybihxaac virus``

    Terms are drawn without replacement, so the subject must provide at
    least as many terms as the graph has nodes. All draws use stream
    ``(3,)``.

    Parameters
    ----------
    graph : TieredDag
        Causal graph
    style : NameStyle
        Naming style
    lexicon : Lexicon
        Terms and change indicators
    seed : integer
        Random seed

    Returns
    -------
    names : list
        Display name per node id
    """
    style = parse_style(style)
    nodes = graph.get_nodes()
    gen = utils.rng(seed, 3)

    # Draw unique tokens
    tokens = []
    seen = set()
    while len(tokens) < len(nodes):
        token = random_token(gen)
        if token not in seen:
            seen.add(token)
            tokens.append(token)

    if style.kind == "random":
        return tokens

    terms = lexicon.get_terms(style.subject)
    if len(terms) < len(nodes):
        raise ValueError("Subject "+style.subject+" has "+str(len(terms))+" terms for "+str(len(nodes))+" nodes")
    picked = [terms[i] for i in gen.permutation(len(terms))[:len(nodes)]]

    if style.kind == "plain":
        return [token+" "+term for token, term in zip(tokens, picked)]

    indicators = lexicon.get_indicators()
    return [indicators[int(gen.integers(len(indicators)))]+" "+token+" "+term for token, term in zip(tokens, picked)]
