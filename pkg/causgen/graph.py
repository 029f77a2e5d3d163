################################################################################
# Graph Module                                                                 #
#                                                                              #
"""Generation and analysis of tiered random causal graphs."""
################################################################################


import numbers

import networkx as nx
import matplotlib.pyplot as plt

import causgen.utils as utils


class TieredDag:
    """This class holds a causal graph whose nodes are partitioned into
    ordered tiers. Nodes are numbered densely tier by tier, so that node
    ids increase from the highest tier (index 0) to the lowest one. Edges
    may only point from a higher tier to a strictly lower tier, which makes
    the graph acyclic by construction.

    Parameters
    ----------
    shape : list
        Number of nodes per tier, index 0 is the highest tier
    edges : list
        List of node id tuples (start, end)
    params : dictionary, optional
        Generation parameters **shape**, **iterations**, **probs** and
        **seed**
    """
    def __init__(self, shape, edges, params=None):
        self._shape = check_shape(shape)
        self._tiers = [tier for tier, size in enumerate(self._shape) for i in range(size)]
        self._offsets = [sum(self._shape[:tier]) for tier in range(len(self._shape)+1)]
        self._params = dict(params) if params else {}

        # Check edges
        num = len(self._tiers)
        edge_set = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < num and 0 <= v < num):
                raise ValueError("Edge ("+str(u)+", "+str(v)+") references an unknown node")
            if self._tiers[u] >= self._tiers[v]:
                raise ValueError("Edge ("+str(u)+", "+str(v)+") does not point to a lower tier")
            edge_set.add((u, v))
        self._edges = sorted(edge_set)

        # Build networkx graph
        self._graph = nx.DiGraph()
        self._graph.add_nodes_from(range(num))
        self._graph.add_edges_from(self._edges)

    def __repr__(self):
        return "TieredDag(shape="+str(self._shape)+", edges="+str(len(self._edges))+")"

    def _check(self, v):
        if not isinstance(v, numbers.Integral) or isinstance(v, bool) or not 0 <= v < len(self._tiers):
            raise ValueError("Unknown node id "+repr(v))


    ##################
    # Getter Methods #
    ##################
    def get_shape(self):
        """Return the graph shape.

        Returns
        -------
        shape : list
            Number of nodes per tier
        """
        return list(self._shape)

    def get_tiers(self):
        """Return the tier index of every node.

        Returns
        -------
        tiers : list
            Tier index per node id
        """
        return list(self._tiers)

    def get_tier(self, v):
        """Return the tier index of a node.

        Parameters
        ----------
        v : integer
            Node id

        Returns
        -------
        tier : integer
            Tier index
        """
        self._check(v)
        return self._tiers[v]

    def get_tier_nodes(self, tier):
        """Return the nodes of a tier.

        Parameters
        ----------
        tier : integer
            Tier index, negative values count from the lowest tier

        Returns
        -------
        nodes : list
            Node ids of the tier
        """
        tier = tier if tier >= 0 else len(self._shape)+tier
        return list(range(self._offsets[tier], self._offsets[tier+1]))

    def get_nodes(self):
        """Return all node ids.

        Returns
        -------
        nodes : list
            Node ids
        """
        return list(range(len(self._tiers)))

    def get_edges(self):
        """Return the sorted edge list.

        Returns
        -------
        edges : list
            Edge tuples (start, end)
        """
        return list(self._edges)

    def get_params(self):
        """Return the generation parameters.

        Returns
        -------
        params : dictionary
            Generation parameters, empty for hand-built graphs
        """
        return dict(self._params)

    def get_graph(self):
        """Return the networkx representation.

        Returns
        -------
        graph : DiGraph
            Directed networkx graph
        """
        return self._graph

    def has_edge(self, u, v):
        """Check whether the edge u -> v exists.

        Parameters
        ----------
        u : integer
            Start node
        v : integer
            End node

        Returns
        -------
        has_edge : bool
            True if edge exists
        """
        return self._graph.has_edge(u, v)


    ############
    # Analysis #
    ############
    def parents(self, v):
        """Return the direct causes of a node."""
        self._check(v)
        return set(self._graph.predecessors(v))

    def children(self, v):
        """Return the direct effects of a node."""
        self._check(v)
        return set(self._graph.successors(v))

    def descendants(self, v):
        """Return all nodes reachable from a node by directed paths."""
        self._check(v)
        return set(nx.descendants(self._graph, v))

    def ancestors(self, v):
        """Return all nodes with a directed path into a node."""
        self._check(v)
        return set(nx.ancestors(self._graph, v))

    def roots(self):
        """Return the nodes without parents."""
        return {v for v in self._graph.nodes if self._graph.in_degree(v) == 0}

    def topological_order(self):
        """Return the nodes in an order consistent with all edges.

        Node ids are assigned tier by tier, so the id order already is a
        topological order.

        Returns
        -------
        order : list
            Node ids
        """
        return self.get_nodes()

    def plot(self, names=None, kwargs={}):
        """Draw the graph with one row per tier.

        Parameters
        ----------
        names : dictionary, optional
            Node id to display name
        kwargs: dict, optional
            Dictionary with plotting parameters passed to networkx
        """
        pos = {}
        for tier, size in enumerate(self._shape):
            for i, v in enumerate(self.get_tier_nodes(tier)):
                pos[v] = (i-(size-1)/2, -tier)

        labels = {v: names[v] for v in self.get_nodes()} if names else None
        nx.draw(self._graph, pos, labels=labels, with_labels=True, node_color="lightblue", edge_color="gray", **kwargs)
        plt.axis("off")


def check_shape(shape):
    """Validate a graph shape.

    Parameters
    ----------
    shape : list
        Number of nodes per tier

    Returns
    -------
    shape : list
        Validated shape as list of integers
    """
    shape = list(shape)
    if not shape:
        raise ValueError("Graph shape is empty")
    for size in shape:
        if isinstance(size, bool) or int(size) != size or size < 1:
            raise ValueError("Graph shape "+str(shape)+" contains an invalid tier size")
    return [int(size) for size in shape]


def parse_shape(text):
    """Parse a shape in ``2*5`` or ``1-2-2-1`` notation.

    Parameters
    ----------
    text : string
        Shape notation

    Returns
    -------
    shape : list
        Number of nodes per tier
    """
    text = text.strip()
    try:
        if "*" in text:
            size, num = text.split("*")
            shape = [int(size)]*int(num)
        else:
            shape = [int(x) for x in text.split("-")]
    except ValueError:
        raise ValueError("Invalid shape notation "+repr(text))
    return check_shape(shape)


def shape_tag(shape):
    """Return the short notation of a shape.

    Parameters
    ----------
    shape : list
        Number of nodes per tier

    Returns
    -------
    tag : string
        ``2*5`` for uniform shapes, ``1-2-2-1`` otherwise
    """
    shape = list(shape)
    if len(set(shape)) == 1:
        return str(shape[0])+"*"+str(len(shape))
    return "-".join(str(x) for x in shape)


def generate_graph(shape, iterations, probs, seed):
    """Generate a random tiered causal graph.

    Each node is visited ``iterations`` times. On every visit three
    independent uniform draws are compared against the junction
    probabilities :math:`P=(p_\\text{fork}, p_\\text{chain}, p_\\text{collider})`

    * **fork** - two edges from the node to distinct lower-tier nodes
    * **chain** - edges node -> m -> w with
      :math:`\\text{tier}(\\text{node})<\\text{tier}(m)<\\text{tier}(w)`
    * **collider** - edges node -> c and u -> c with another node u above c

    Junctions whose partner nodes do not exist are skipped, duplicate
    edges are ignored. Each visit draws from its own random stream
    ``(0, iteration, node)``. Finally every node below the highest tier
    without a parent receives one parent drawn uniformly from the strictly
    higher tiers (stream ``(1, node)``).

    Parameters
    ----------
    shape : list
        Number of nodes per tier
    iterations : integer
        Number of visits per node
    probs : list
        Fork, chain and collider probability
    seed : integer
        Random seed

    Returns
    -------
    graph : TieredDag
        Generated graph
    """
    # Process input
    shape = check_shape(shape)
    if isinstance(iterations, bool) or int(iterations) != iterations or iterations < 0:
        raise ValueError("Number of iterations must be a non-negative integer")
    probs = [float(p) for p in probs]
    if len(probs) != 3 or any(p < 0 or p > 1 for p in probs):
        raise ValueError("Junction probabilities must be three values in [0, 1]")
    p_fork, p_chain, p_collider = probs

    # Tier lookup
    tiers = [tier for tier, size in enumerate(shape) for i in range(size)]
    offsets = [sum(shape[:tier]) for tier in range(len(shape)+1)]
    num = len(tiers)
    num_tiers = len(shape)

    edges = set()
    for it in range(int(iterations)):
        for node in range(num):
            gen = utils.rng(seed, 0, it, node)
            draws = gen.random(3)
            t = tiers[node]

            # Fork
            if draws[0] < p_fork:
                lower = list(range(offsets[t+1], num))
                if len(lower) >= 2:
                    a, b = gen.choice(lower, 2, replace=False)
                    edges.add((node, int(a)))
                    edges.add((node, int(b)))

            # Chain
            if draws[1] < p_chain:
                mids = list(range(offsets[t+1], offsets[num_tiers-1]))
                if mids:
                    m = int(gen.choice(mids))
                    w = int(gen.choice(list(range(offsets[tiers[m]+1], num))))
                    edges.add((node, m))
                    edges.add((m, w))

            # Collider - c needs a second parent candidate besides the node
            if draws[2] < p_collider:
                colliders = [c for c in range(offsets[t+1], num) if offsets[tiers[c]] >= 2]
                if colliders:
                    c = int(gen.choice(colliders))
                    others = [u for u in range(offsets[tiers[c]]) if u != node]
                    u = int(gen.choice(others))
                    edges.add((node, c))
                    edges.add((u, c))

    # Closure
    has_parent = {v for u, v in edges}
    for v in range(offsets[1], num):
        if v not in has_parent:
            gen = utils.rng(seed, 1, v)
            u = int(gen.choice(list(range(offsets[tiers[v]]))))
            edges.add((u, v))

    params = {"shape": shape, "iterations": int(iterations), "probs": probs, "seed": int(seed)}

    return TieredDag(shape, edges, params)


def complexity_stats(graph):
    """Calculate the complexity indicators of a graph.

    With indegree :math:`d^-_b` and outdegree :math:`d^+_b` of node b the
    junction counts are

    .. math::

        \\text{CH}=\\sum_b d^-_b d^+_b,\\qquad
        \\text{FO}=\\sum_b \\binom{d^+_b}{2},\\qquad
        \\text{CO}=\\sum_b \\binom{d^-_b}{2}

    and the average indegree is the number of edges over the number of
    nodes.

    Parameters
    ----------
    graph : TieredDag
        Causal graph

    Returns
    -------
    stats : dictionary
        Average indegree **ind**, chain **ch**, fork **fo** and collider
        **co** counts
    """
    g = graph.get_graph()
    stats = {"ind": len(graph.get_edges())/len(graph.get_nodes()), "ch": 0, "fo": 0, "co": 0}
    for b in g.nodes:
        d_in = g.in_degree(b)
        d_out = g.out_degree(b)
        stats["ch"] += d_in*d_out
        stats["fo"] += d_out*(d_out-1)//2
        stats["co"] += d_in*(d_in-1)//2
    return stats
