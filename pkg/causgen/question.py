################################################################################
# Question Module                                                              #
#                                                                              #
"""Benchmark questions with machine computed ground truth for the causal
path, backdoor adjustment, factual and counterfactual tasks."""
################################################################################


import math

import causgen.utils as utils
import causgen.graph as graph_mod
import causgen.scm as scm_mod
import causgen.oracle as oracle
import causgen.naming as naming

from causgen.graph import TieredDag
from causgen.scm import Scm


TASKS = ["CP", "BA", "FI", "CI"]

SCHEMA_VERSION = 1

_TEMPLATES = {}


class Question:
    """This class holds one benchmark question.

    Parameters
    ----------
    task : string
        Task kind **CP**, **BA**, **FI** or **CI**
    graph : TieredDag
        Causal graph
    names : list
        Display name per node id
    style : NameStyle
        Naming style of the names
    params : dictionary
        Question parameters, see the builder functions
    text : string
        Rendered question text
    truth : dictionary
        Ground truth, pair tuple to path list (CP) or
        :class:`causgen.oracle.AdjustmentSets` (BA), queried node to state
        (FI, CI)
    scm : Scm, optional
        Structural causal model for FI and CI
    """
    def __init__(self, task, graph, names, style, params, text, truth, scm=None):
        if task not in TASKS:
            raise ValueError("Unknown task "+repr(task))
        self._task = task
        self._graph = graph
        self._names = list(names)
        self._style = naming.parse_style(style)
        self._params = dict(params)
        self._text = text
        self._truth = truth
        self._scm = scm
        self._stats = graph_mod.complexity_stats(graph)

        # Identifier
        gen = graph.get_params()
        self._id = "-".join([task.lower(), graph_mod.shape_tag(graph.get_shape()), "i"+str(gen.get("iterations", 0)), str(gen.get("seed", 0))])
        if "ce_d" in self._params:
            self._id += "-ce"+str(self._params["ce_d"])
        if "wi_n" in self._params:
            self._id += "-wi"+str(self._params["wi_n"])
        self._id += "-"+naming.style_tag(self._style)

    def __repr__(self):
        return "Question("+self._id+")"


    ##################
    # Getter Methods #
    ##################
    def get_id(self):
        """Return the stable question identifier.

        Returns
        -------
        id : string
            Identifier built from task, shape, iterations, seed, ce_d or wi_n
            and name style, e.g. ``cp-1*6-i3-1234-ce1.0-random``
        """
        return self._id

    def get_task(self):
        """Return the task kind.

        Returns
        -------
        task : string
            **CP**, **BA**, **FI** or **CI**
        """
        return self._task

    def get_graph(self):
        """Return the causal graph.

        Returns
        -------
        graph : TieredDag
            Causal graph
        """
        return self._graph

    def get_names(self):
        """Return the display names.

        Returns
        -------
        names : list
            Display name per node id
        """
        return list(self._names)

    def get_style(self):
        """Return the naming style.

        Returns
        -------
        style : NameStyle
            Naming style of the names
        """
        return self._style

    def get_scm(self):
        """Return the structural causal model.

        Returns
        -------
        scm : Scm
            Structural causal model, None for CP and BA
        """
        return self._scm

    def get_params(self):
        """Return the question parameters.

        Returns
        -------
        params : dictionary
            Builder parameters such as **pairs**, **ce_d**, **queries**,
            **observed**, **interventions** or **wi_n**
        """
        return dict(self._params)

    def get_text(self):
        """Return the question text.

        Returns
        -------
        text : string
            Rendered question text
        """
        return self._text

    def get_truth(self):
        """Return the ground truth.

        Returns
        -------
        truth : dictionary
            Pair tuple to path list (CP) or adjustment sets (BA), queried
            node to state (FI, CI)
        """
        return self._truth

    def get_stats(self):
        """Return the graph complexity indicators.

        Returns
        -------
        stats : dictionary
            Keys **ind**, **ch**, **fo** and **co**
        """
        return dict(self._stats)

    def get_pairs(self):
        """Return the cause and effect pairs.

        Returns
        -------
        pairs : list
            (cause, effect) tuples of a CP or BA question, empty otherwise
        """
        return [tuple(pair) for pair in self._params.get("pairs", [])]

    def get_queries(self):
        """Return the queried nodes.

        Returns
        -------
        queries : list
            Queried node ids of a FI or CI question, empty otherwise
        """
        return list(self._params.get("queries", []))


    #################
    # Serialization #
    #################
    def to_record(self):
        """Convert the question into a JSON compatible record.

        Returns
        -------
        record : dictionary
            Record with the fixed schema field names
        """
        gen = self._graph.get_params()
        params = dict(self._params)
        for key in ["observed", "interventions"]:
            if key in params:
                params[key] = [[v, state] for v, state in sorted(params[key].items())]
        params["pairs"] = [list(pair) for pair in params.get("pairs", [])]
        if not params["pairs"]:
            del params["pairs"]
        params["probs"] = gen.get("probs", [])

        if self._task == "CP":
            truth = [{"cause": x, "effect": y, "paths": [list(p.nodes) for p in paths]} for (x, y), paths in self._truth.items()]
        elif self._task == "BA":
            truth = [{"cause": x, "effect": y, "minimal_sets": [sorted(s) for s in sets.minimal_sets]} for (x, y), sets in self._truth.items()]
        else:
            truth = [[v, state] for v, state in sorted(self._truth.items())]

        functions = []
        if self._scm is not None:
            functions = [[v, scm_mod.render_expr(expr, self._names)] for v, expr in sorted(self._scm.get_functions().items())]

        return {"id": self._id,
                "task": self._task,
                "schema_version": SCHEMA_VERSION,
                "shape": self._graph.get_shape(),
                "iterations": gen.get("iterations", 0),
                "seed": gen.get("seed", 0),
                "params": params,
                "name_style": naming.style_tag(self._style),
                "tiers": self._graph.get_tiers(),
                "edges": [list(e) for e in self._graph.get_edges()],
                "names": self._names,
                "functions": functions,
                "question_text": self._text,
                "ground_truth": truth,
                "stats": self._stats}

    @classmethod
    def from_record(cls, record):
        """Rebuild a question from a record.

        Parameters
        ----------
        record : dictionary
            Record created by :meth:`to_record`

        Returns
        -------
        question : Question
            Rebuilt question
        """
        if record.get("schema_version") != SCHEMA_VERSION:
            raise ValueError("Unknown schema version "+repr(record.get("schema_version")))

        params = dict(record["params"])
        probs = params.pop("probs", [])
        graph = TieredDag(record["shape"], record["edges"], {"shape": record["shape"], "iterations": record["iterations"], "probs": probs, "seed": record["seed"]})
        if graph.get_tiers() != record["tiers"]:
            raise ValueError("Record "+record["id"]+" has inconsistent tiers")
        names = record["names"]

        for key in ["observed", "interventions"]:
            if key in params:
                params[key] = {int(v): bool(state) for v, state in params[key]}
        if "pairs" in params:
            params["pairs"] = [tuple(pair) for pair in params["pairs"]]

        scm = None
        if record["functions"]:
            scm = Scm(graph, {int(v): scm_mod.parse_expr(text, names) for v, text in record["functions"]})

        task = record["task"]
        if task == "CP":
            truth = {(t["cause"], t["effect"]): [oracle.make_path(graph, p) for p in t["paths"]] for t in record["ground_truth"]}
        elif task == "BA":
            truth = {(t["cause"], t["effect"]): oracle.AdjustmentSets(t["cause"], t["effect"], tuple(frozenset(s) for s in t["minimal_sets"])) for t in record["ground_truth"]}
        else:
            truth = {int(v): bool(state) for v, state in record["ground_truth"]}

        question = cls(task, graph, names, record["name_style"], params, record["question_text"], truth, scm)
        if question.get_id() != record["id"]:
            raise ValueError("Record id "+record["id"]+" does not match its parameters")
        return question


#############
# Templates #
#############
def load_templates(link=""):
    """Load question templates.

    Parameters
    ----------
    link : string, optional
        Link to template file, the bundled templates are used by default

    Returns
    -------
    templates : dictionary
        Section name and template text
    """
    link = link if link else utils.data_link("templates.txt")
    if link not in _TEMPLATES:
        sections = utils.read_sections(link)
        for task in TASKS:
            if task not in sections or task+".answer" not in sections:
                raise ValueError("Template file misses section "+task)
        _TEMPLATES[link] = {key: "\n".join(lines) for key, lines in sections.items()}
    return _TEMPLATES[link]


def answer_format(task):
    """Return the answer format instruction of a task.

    Parameters
    ----------
    task : string
        Task kind

    Returns
    -------
    text : string
        Answer format instruction ending the question text
    """
    return load_templates()[task+".answer"]


def _fill(task, slots):
    text = load_templates()[task]
    slots = dict(slots, ANSWER_FORMAT=answer_format(task))
    for key, value in slots.items():
        text = text.replace("{"+key+"}", value)
    return text


def _edges_text(graph, names):
    return "\n".join("- "+names[u]+" has a causal effect on "+names[v]+"." for u, v in graph.get_edges())


def _pairs_text(pairs, names):
    return "\n".join("- cause: "+names[x]+", effect: "+names[y] for x, y in pairs)


def _state_text(v, state, names):
    return names[v]+(" happens" if state else " does not happen")


def _functions_text(scm, names):
    return "\n".join("- "+names[v]+" happens if and only if "+scm_mod.describe_expr(expr, names)+"."
                     for v, expr in sorted(scm.get_functions().items()))


################
# Ground Truth #
################
def _cp_truth(graph, pairs):
    return {(x, y): oracle.enumerate_causal_paths(graph, x, y) for x, y in pairs}


def _ba_truth(graph, pairs, max_size, max_candidates):
    return {(x, y): oracle.enumerate_minimal_adjustment_sets(graph, x, y, max_size, max_candidates) for x, y in pairs}


def _inference_truth(scm, observed, interventions, queries):
    states = scm_mod.evaluate_counterfactual(scm, observed, interventions)
    return {q: states[q] for q in queries}


def solve(question):
    """Recompute the ground truth of a question from its graph, model and
    parameters.

    Parameters
    ----------
    question : Question, dictionary
        Benchmark question or its record

    Returns
    -------
    truth : dictionary
        Recomputed ground truth
    """
    if isinstance(question, dict):
        question = Question.from_record(question)

    params = question.get_params()
    task = question.get_task()
    if task == "CP":
        return _cp_truth(question.get_graph(), question.get_pairs())
    elif task == "BA":
        return _ba_truth(question.get_graph(), question.get_pairs(), params["max_size"], params["max_candidates"])
    return _inference_truth(question.get_scm(), params["observed"], params.get("interventions", {}), params["queries"])


############
# Builders #
############
def select_cause_effect_tiers(shape, ce_d):
    """Select cause and effect tier from the relative tier distance.

    Interior tiers are :math:`1,\\dots,T-2`. The cause is anchored at the
    highest interior tier and the effect lies

    .. math::

        d=\\max\\left(1, \\left\\lfloor ce_d\\cdot(T-3)+\\tfrac12\\right\\rfloor\\right)

    tiers below, so that :math:`ce_d=1` is the farthest and
    :math:`ce_d=0` the closest interior pair.

    Parameters
    ----------
    shape : list
        Number of nodes per tier
    ce_d : float
        Relative distance in [0, 1]

    Returns
    -------
    tiers : tuple
        Cause and effect tier index
    """
    num_tiers = len(graph_mod.check_shape(shape))
    if num_tiers < 4:
        raise ValueError("Cause and effect tiers need at least two interior tiers, shape has "+str(num_tiers)+" tiers")
    if not 0 <= ce_d <= 1:
        raise ValueError("Relative tier distance must be in [0, 1]")
    d = max(1, math.floor(ce_d*(num_tiers-3)+0.5))
    return (1, 1+d)


def _pair_params(graph, ce_d):
    cause, effect = select_cause_effect_tiers(graph.get_shape(), ce_d)
    pairs = [(x, y) for x in graph.get_tier_nodes(cause) for y in graph.get_tier_nodes(effect)]
    return {"ce_d": float(ce_d), "cause_tier": cause, "effect_tier": effect, "pairs": pairs}


def build_cp_question(graph, names, ce_d, style="random"):
    """Create a causal path finding question.

    Parameters
    ----------
    graph : TieredDag
        Causal graph
    names : list
        Display name per node id
    ce_d : float
        Relative cause-effect tier distance
    style : NameStyle, optional
        Naming style of the names

    Returns
    -------
    question : Question
        Question with all causal paths per pair as ground truth
    """
    params = _pair_params(graph, ce_d)
    text = _fill("CP", {"EDGES": _edges_text(graph, names), "PAIRS": _pairs_text(params["pairs"], names)})
    return Question("CP", graph, names, style, params, text, _cp_truth(graph, params["pairs"]))


def build_ba_question(graph, names, ce_d, style="random", max_size=4, max_candidates=24):
    """Create a backdoor adjustment question.

    Parameters
    ----------
    graph : TieredDag
        Causal graph
    names : list
        Display name per node id
    ce_d : float
        Relative cause-effect tier distance
    style : NameStyle, optional
        Naming style of the names
    max_size : integer, optional
        Maximal adjustment set size
    max_candidates : integer, optional
        Candidate limit of the adjustment search

    Returns
    -------
    question : Question
        Question with all minimal adjustment sets per pair as ground truth
    """
    params = _pair_params(graph, ce_d)
    params.update({"max_size": max_size, "max_candidates": max_candidates})
    truth = _ba_truth(graph, params["pairs"], max_size, max_candidates)
    text = _fill("BA", {"EDGES": _edges_text(graph, names), "PAIRS": _pairs_text(params["pairs"], names)})
    return Question("BA", graph, names, style, params, text, truth)


def _inference_slots(scm, names, observed, queries):
    graph = scm.get_graph()
    return {"EDGES": _edges_text(graph, names),
            "FUNCTIONS": _functions_text(scm, names),
            "OBSERVED": "\n".join("- "+_state_text(v, state, names)+"." for v, state in sorted(observed.items())),
            "QUERY": "\n".join("- "+names[q] for q in queries)}


def _observe(scm, seed, observed):
    graph = scm.get_graph()
    if observed is None:
        top = graph.get_tier_nodes(0)
        draws = utils.rng(seed, 4).random(len(top)) < 0.5
        observed = {v: bool(state) for v, state in zip(top, draws)}
    return {int(v): bool(state) for v, state in observed.items()}


def build_fi_question(scm, names, seed, style="random", observed=None):
    """Create a factual inference question.

    The highest tier is observed with states drawn uniformly from stream
    ``(4,)``, the lowest tier is queried.

    Parameters
    ----------
    scm : Scm
        Structural causal model
    names : list
        Display name per node id
    seed : integer
        Random seed
    style : NameStyle, optional
        Naming style of the names
    observed : dictionary, optional
        Fixed observation instead of a random one

    Returns
    -------
    question : Question
        Question with the queried node states as ground truth
    """
    graph = scm.get_graph()
    observed = _observe(scm, seed, observed)
    queries = graph.get_tier_nodes(-1)
    params = {"observed": observed, "queries": queries}
    text = _fill("FI", _inference_slots(scm, names, observed, queries))
    return Question("FI", graph, names, style, params, text, _inference_truth(scm, observed, {}, queries), scm)


def build_ci_question(scm, names, wi_n, seed, style="random", observed=None, whatif=None):
    """Create a counterfactual inference question.

    In addition to the factual setting, ``wi_n`` distinct nodes outside the
    queried tier are drawn from stream ``(5,)`` and assumed to take the
    negation of their factual state.

    Parameters
    ----------
    scm : Scm
        Structural causal model
    names : list
        Display name per node id
    wi_n : integer
        Number of what-if nodes
    seed : integer
        Random seed
    style : NameStyle, optional
        Naming style of the names
    observed : dictionary, optional
        Fixed observation instead of a random one
    whatif : list, optional
        Fixed what-if nodes instead of random ones

    Returns
    -------
    question : Question
        Question with the counterfactual queried node states as ground truth
    """
    graph = scm.get_graph()
    observed = _observe(scm, seed, observed)
    queries = graph.get_tier_nodes(-1)
    candidates = [v for v in graph.get_nodes() if v not in queries]
    if isinstance(wi_n, bool) or int(wi_n) != wi_n or not 1 <= wi_n <= len(candidates):
        raise ValueError("Number of what-if nodes must be in [1, "+str(len(candidates))+"], got "+repr(wi_n))

    if whatif is None:
        whatif = sorted(int(v) for v in utils.rng(seed, 5).choice(candidates, int(wi_n), replace=False))
    elif len(set(whatif)) != wi_n or any(v not in candidates for v in whatif):
        raise ValueError("What-if nodes must be "+str(wi_n)+" distinct nodes outside the queried tier")

    factual = scm_mod.evaluate_factual(scm, observed)
    interventions = {v: not factual[v] for v in sorted(whatif)}

    params = {"observed": observed, "interventions": interventions, "queries": queries, "wi_n": int(wi_n)}
    slots = _inference_slots(scm, names, observed, queries)
    slots["WHATIF"] = "\n".join("- What if "+names[v]+(" had happened?" if state else " had not happened?") for v, state in interventions.items())
    text = _fill("CI", slots)
    return Question("CI", graph, names, style, params, text, _inference_truth(scm, observed, interventions, queries), scm)


def complexity_filter(question, max_paths_per_pair=20, max_total_paths=60):
    """Check whether a CP or BA question is simple enough to keep.

    Parameters
    ----------
    question : Question
        CP or BA question
    max_paths_per_pair : integer, optional
        Maximal number of causal paths of a single pair
    max_total_paths : integer, optional
        Maximal number of causal paths over all pairs

    Returns
    -------
    is_keep : bool
        True if the question passes both limits
    """
    if question.get_task() not in ["CP", "BA"]:
        raise ValueError("Complexity filter applies to CP and BA questions only")
    graph = question.get_graph()
    counts = [len(oracle.enumerate_causal_paths(graph, x, y)) for x, y in question.get_pairs()]
    return all(c <= max_paths_per_pair for c in counts) and sum(counts) <= max_total_paths
