################################################################################
# SCM Module                                                                   #
#                                                                              #
"""Boolean structural causal models with factual and counterfactual
evaluation."""
################################################################################


import causgen.utils as utils


class Scm:
    """This class attaches one boolean structural function to every node of
    a causal graph that has at least one parent.

    Functions are expression trees stored as nested tuples

    * ``("var", node, negated)`` - parent reference, optionally negated
    * ``("and", left, right)`` - conjunction
    * ``("or", left, right)`` - disjunction

    Every parent of a node appears as a leaf of its function exactly once.

    Parameters
    ----------
    graph : TieredDag
        Causal graph
    functions : dictionary
        Node id and expression tree for every non-root node
    """
    def __init__(self, graph, functions):
        self._graph = graph
        self._functions = dict(functions)

        # Check domain
        roots = graph.roots()
        non_roots = set(graph.get_nodes())-roots
        if set(self._functions.keys()) != non_roots:
            raise ValueError("Structural functions must be given for exactly the non-root nodes")

        # Check leaves
        for v, expr in self._functions.items():
            leaves = [leaf[1] for leaf in leaves_of(expr)]
            if sorted(leaves) != sorted(graph.parents(v)):
                raise ValueError("Function of node "+str(v)+" must reference each parent exactly once")

    def __repr__(self):
        return "Scm("+repr(self._graph)+")"


    ##################
    # Getter Methods #
    ##################
    def get_graph(self):
        """Return the causal graph.

        Returns
        -------
        graph : TieredDag
            Causal graph
        """
        return self._graph

    def get_functions(self):
        """Return the structural functions.

        Returns
        -------
        functions : dictionary
            Node id and expression tree
        """
        return dict(self._functions)

    def get_function(self, v):
        """Return the structural function of a node.

        Parameters
        ----------
        v : integer
            Node id

        Returns
        -------
        expr : tuple
            Expression tree
        """
        return self._functions[v]


###############
# Expressions #
###############
def leaves_of(expr):
    """Return the leaves of an expression tree from left to right.

    Parameters
    ----------
    expr : tuple
        Expression tree

    Returns
    -------
    leaves : list
        Leaf tuples
    """
    if expr[0] == "var":
        return [expr]
    return leaves_of(expr[1])+leaves_of(expr[2])


def evaluate_expr(expr, values):
    """Evaluate an expression tree.

    Parameters
    ----------
    expr : tuple
        Expression tree
    values : dictionary
        Node id and boolean state

    Returns
    -------
    state : bool
        Expression value
    """
    if expr[0] == "var":
        return values[expr[1]] != expr[2]
    elif expr[0] == "and":
        return evaluate_expr(expr[1], values) and evaluate_expr(expr[2], values)
    elif expr[0] == "or":
        return evaluate_expr(expr[1], values) or evaluate_expr(expr[2], values)
    raise ValueError("Unknown expression operator "+repr(expr[0]))


def render_expr(expr, names):
    """Render an expression with the grammar ``NAME``, ``not NAME``,
    ``(E and E)`` and ``(E or E)``.

    Parameters
    ----------
    expr : tuple
        Expression tree
    names : list
        Display name per node id

    Returns
    -------
    text : string
        Rendered expression
    """
    if expr[0] == "var":
        return ("not " if expr[2] else "")+names[expr[1]]
    return "("+render_expr(expr[1], names)+" "+expr[0]+" "+render_expr(expr[2], names)+")"


def parse_expr(text, names):
    """Parse an expression rendered by :func:`render_expr`.

    Parameters
    ----------
    text : string
        Rendered expression
    names : list
        Display name per node id

    Returns
    -------
    expr : tuple
        Expression tree
    """
    ids = {name: v for v, name in enumerate(names)}

    def parse(part):
        part = part.strip()
        if part.startswith("("):
            if not part.endswith(")"):
                raise ValueError("Unbalanced expression "+repr(part))
            inner = part[1:-1]
            depth = 0
            for i, char in enumerate(inner):
                if char == "(":
                    depth += 1
                elif char == ")":
                    depth -= 1
                elif depth == 0:
                    for op in ["and", "or"]:
                        sep = " "+op+" "
                        if inner.startswith(sep, i):
                            return (op, parse(inner[:i]), parse(inner[i+len(sep):]))
            raise ValueError("Missing operator in "+repr(part))

        negated = part.startswith("not ")
        name = part[4:].strip() if negated else part
        if name not in ids:
            raise ValueError("Unknown name "+repr(name)+" in expression")
        return ("var", ids[name], negated)

    return parse(text)


def describe_expr(expr, names, is_top=True):
    """Describe an expression in words for the question text.

    Parameters
    ----------
    expr : tuple
        Expression tree
    names : list
        Display name per node id
    is_top : bool, optional
        True to omit the outer parentheses

    Returns
    -------
    text : string
        Description such as ``A happens or (B happens and C does not happen)``
    """
    if expr[0] == "var":
        return names[expr[1]]+(" does not happen" if expr[2] else " happens")
    text = describe_expr(expr[1], names, False)+" "+expr[0]+" "+describe_expr(expr[2], names, False)
    return text if is_top else "("+text+")"


##############
# Generation #
##############
def generate_functions(graph, seed):
    """Attach random boolean functions to a graph.

    For every non-root node the parents are shuffled and combined from left
    to right, each combination being AND or OR with equal probability and
    each leaf negated with probability 1/2. Node v draws from stream
    ``(2, v)``.

    Parameters
    ----------
    graph : TieredDag
        Causal graph
    seed : integer
        Random seed

    Returns
    -------
    scm : Scm
        Structural causal model
    """
    functions = {}
    for v in graph.topological_order():
        parents = sorted(graph.parents(v))
        if not parents:
            continue

        gen = utils.rng(seed, 2, v)
        order = [int(p) for p in gen.permutation(parents)]
        negated = gen.random(len(order)) < 0.5
        ops = gen.random(len(order)-1) < 0.5

        expr = ("var", order[0], bool(negated[0]))
        for i in range(1, len(order)):
            expr = ("and" if ops[i-1] else "or", expr, ("var", order[i], bool(negated[i])))
        functions[v] = expr

    return Scm(graph, functions)


##############
# Evaluation #
##############
def _check_observed(scm, observed):
    roots = scm.get_graph().roots()
    if set(observed.keys()) != roots:
        missing = sorted(roots-set(observed.keys()))
        extra = sorted(set(observed.keys())-roots)
        raise ValueError("Observed states must assign exactly the root nodes - missing "+str(missing)+", non-root "+str(extra))


def evaluate_factual(scm, observed):
    """Infer the state of every node from the root states.

    Parameters
    ----------
    scm : Scm
        Structural causal model
    observed : dictionary
        Node id and boolean state for exactly the root nodes

    Returns
    -------
    states : dictionary
        Node id and boolean state for all nodes
    """
    return evaluate_counterfactual(scm, observed, {})


def evaluate_counterfactual(scm, observed, interventions):
    """Infer the state of every node in the mutilated model.

    Intervened nodes lose their structural function, i.e. all incoming
    edges, and are pinned to the intervention value. This also overrides
    the observation of an intervened root. All remaining nodes are then
    evaluated in topological order.

    Parameters
    ----------
    scm : Scm
        Structural causal model
    observed : dictionary
        Node id and boolean state for exactly the root nodes
    interventions : dictionary
        Node id and pinned boolean state

    Returns
    -------
    states : dictionary
        Node id and boolean state for all nodes
    """
    graph = scm.get_graph()
    _check_observed(scm, observed)
    nodes = set(graph.get_nodes())
    for v in interventions:
        if v not in nodes:
            raise ValueError("Intervention on unknown node "+repr(v))

    states = {}
    for v in graph.topological_order():
        if v in interventions:
            states[v] = bool(interventions[v])
        elif v in observed:
            states[v] = bool(observed[v])
        else:
            states[v] = evaluate_expr(scm.get_function(v), states)

    return states
