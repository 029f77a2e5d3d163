################################################################################
# Oracle Module                                                                #
#                                                                              #
"""Ground truth solvers for causal path finding and backdoor adjustment."""
################################################################################


import itertools as it
import collections

import networkx as nx


Path = collections.namedtuple("Path", ["nodes", "directions"])
Path.__doc__ = """Simple path of a causal graph.

Parameters
----------
nodes : tuple
    Node ids along the path
directions : tuple
    ``"->"`` if the step follows the edge direction, ``"<-"`` otherwise
"""

AdjustmentSets = collections.namedtuple("AdjustmentSets", ["treatment", "outcome", "minimal_sets"])
AdjustmentSets.__doc__ = """Ground truth of a backdoor adjustment question.

Parameters
----------
treatment : integer
    Cause node
outcome : integer
    Effect node
minimal_sets : tuple
    Sorted tuple of inclusion-minimal valid adjustment sets as frozensets
"""


class BudgetError(RuntimeError):
    """Raised when an exhaustive search exceeds its configured budget."""


def _check_pair(graph, x, y):
    nodes = set(graph.get_nodes())
    for v in [x, y]:
        if v not in nodes:
            raise ValueError("Unknown node id "+repr(v))
    if x == y:
        raise ValueError("Cause and effect must be different nodes")


def make_path(graph, nodes):
    """Create a path with the step directions read from the graph.

    Parameters
    ----------
    graph : TieredDag
        Causal graph
    nodes : list
        Node ids along the path, consecutive nodes must be adjacent

    Returns
    -------
    path : Path
        Path with one direction per step
    """
    directions = tuple("->" if graph.has_edge(a, b) else "<-" for a, b in zip(nodes[:-1], nodes[1:]))
    return Path(tuple(int(v) for v in nodes), directions)


#########
# Paths #
#########
def enumerate_causal_paths(graph, x, y):
    """Find all directed paths from a cause to an effect with a depth-first
    search.

    Parameters
    ----------
    graph : TieredDag
        Causal graph
    x : integer
        Cause node
    y : integer
        Effect node

    Returns
    -------
    paths : list
        Paths in lexicographic order of their node ids
    """
    _check_pair(graph, x, y)
    paths = [make_path(graph, p) for p in nx.all_simple_paths(graph.get_graph(), x, y)]
    return sorted(paths, key=lambda p: p.nodes)


def enumerate_backdoor_paths(graph, x, y):
    """Find all backdoor paths between treatment and outcome.

    A backdoor path is a simple path of the undirected skeleton whose first
    step enters the treatment, i.e. :math:`x\\leftarrow\\dots y`.

    Parameters
    ----------
    graph : TieredDag
        Causal graph
    x : integer
        Treatment node
    y : integer
        Outcome node

    Returns
    -------
    paths : list
        Paths in lexicographic order of their node ids
    """
    _check_pair(graph, x, y)
    skeleton = graph.get_graph().to_undirected(as_view=True)
    paths = []
    for nodes in nx.all_simple_paths(skeleton, x, y):
        if graph.has_edge(nodes[1], x):
            paths.append(make_path(graph, nodes))
    return sorted(paths, key=lambda p: p.nodes)


############
# Blocking #
############
def is_path_blocked(graph, path, z, desc=None):
    """Check whether a control set blocks a path.

    An interior node b with neighbours a and c blocks the path if

    * a - b - c is a chain or a fork and b is controlled, or
    * a -> b <- c is a collider and neither b nor any of its descendants is
      controlled.

    Parameters
    ----------
    graph : TieredDag
        Causal graph
    path : Path
        Path to check
    z : set
        Controlled nodes
    desc : dictionary, optional
        Cached descendant sets per node

    Returns
    -------
    is_blocked : bool
        True if the path is blocked
    """
    z = set(z)
    if path.nodes[0] in z or path.nodes[-1] in z:
        raise ValueError("Control set must not contain the path endpoints")

    for i in range(1, len(path.nodes)-1):
        b = path.nodes[i]
        if path.directions[i-1] == "->" and path.directions[i] == "<-":
            below = desc[b] if desc is not None else graph.descendants(b)
            if b not in z and not (below & z):
                return True
        elif b in z:
            return True

    return False


def _is_d_separator(g, x, y, z):
    # networkx before 3.3 only provides d_separated
    test = getattr(nx, "is_d_separator", None) or nx.d_separated
    return test(g, {x}, {y}, set(z))


def is_valid_adjustment_set(graph, x, y, z):
    """Check the backdoor criterion for a control set.

    The set is valid if it contains no descendant of the treatment and
    d-separates treatment and outcome once the outgoing edges of the
    treatment are removed. The remaining paths between both are exactly
    the backdoor paths. Any other non-causal path leaving the treatment
    passes a collider among the treatment descendants, so excluding those
    descendants keeps such paths closed.

    Parameters
    ----------
    graph : TieredDag
        Causal graph
    x : integer
        Treatment node
    y : integer
        Outcome node
    z : set
        Controlled nodes

    Returns
    -------
    is_valid : bool
        True if z is a valid adjustment set
    """
    _check_pair(graph, x, y)
    z = set(z)
    if x in z or y in z:
        raise ValueError("Control set must not contain treatment or outcome")
    if z & graph.descendants(x):
        return False

    backdoor = graph.get_graph().copy()
    backdoor.remove_edges_from([(x, c) for c in graph.children(x)])
    return _is_d_separator(backdoor, x, y, z)


def enumerate_minimal_adjustment_sets(graph, x, y, max_size=4, max_candidates=24):
    """Find all inclusion-minimal valid adjustment sets up to a size bound.

    Candidates are all nodes except treatment, outcome and the treatment
    descendants. Subsets are tested in ascending size so that supersets of
    already found sets can be skipped. A member of a minimal set always
    lies on a backdoor path and is an ancestor of treatment or outcome,
    hence only those candidates are combined.

    Parameters
    ----------
    graph : TieredDag
        Causal graph
    x : integer
        Treatment node
    y : integer
        Outcome node
    max_size : integer, optional
        Maximal set size
    max_candidates : integer, optional
        Maximal number of candidate nodes before a :class:`BudgetError`
        is raised

    Returns
    -------
    truth : AdjustmentSets
        All minimal sets, only the empty set if there is no backdoor path
    """
    _check_pair(graph, x, y)
    paths = enumerate_backdoor_paths(graph, x, y)
    if not paths:
        return AdjustmentSets(x, y, (frozenset(),))

    desc_x = graph.descendants(x)
    candidates = set(graph.get_nodes())-{x, y}-desc_x
    if len(candidates) > max_candidates:
        raise BudgetError("Adjustment search for ("+str(x)+", "+str(y)+") has "+str(len(candidates))+" candidates, limit is "+str(max_candidates))

    on_path = candidates & {v for p in paths for v in p.nodes[1:-1]}
    on_path = sorted(on_path & (graph.ancestors(x) | graph.ancestors(y)))
    desc = {v: graph.descendants(v) for v in graph.get_nodes()}

    found = []
    for size in range(min(max_size, len(on_path))+1):
        for combo in it.combinations(on_path, size):
            z = frozenset(combo)
            if any(s <= z for s in found):
                continue
            if all(is_path_blocked(graph, p, z, desc) for p in paths):
                found.append(z)

    return AdjustmentSets(x, y, tuple(sorted(found, key=lambda s: (len(s), sorted(s)))))
