################################################################################
# Evaluate Module                                                              #
#                                                                              #
"""Querying of chat models, answer extraction, exact-match scoring and
accuracy reports."""
################################################################################


import os
import re
import sys
import json
import time
import logging
import threading
import concurrent.futures

import httpx
import pandas as pd
import seaborn as sns
import matplotlib.pyplot as plt

import causgen.utils as utils
import causgen.oracle as oracle
import causgen.prompt as prompt_mod
import causgen.graph as graph_mod
import causgen.naming as naming


logger = logging.getLogger(__name__)

DIMS = ["shape", "prompt", "iterations", "ce_d", "wi_n", "name_style", "task", "model"]
SCORE_MODES = ["minimal", "valid"]
VERDICTS = ["correct", "incorrect", "unparsed"]


class TransportError(RuntimeError):
    """Raised when a request fails after all retries."""


class CredentialError(RuntimeError):
    """Raised when a token is missing or rejected."""


class Endpoint:
    """This class describes a chat-completion endpoint.

    Requests are sent as OpenAI style chat bodies unless a body template is
    given. Responses are cached as
    one JSON file per request hash in the cache directory, so that a cached
    prompt is never sent twice.

    Parameters
    ----------
    url : string
        Chat-completion URL
    model : string
        Model identifier
    token_env : string, optional
        Name of the environment variable holding the bearer token, no
        authorization header is sent if empty
    temperature : float, optional
        Sampling temperature
    max_tokens : integer, optional
        Maximal completion length
    rate_limit : float, optional
        Maximal number of requests per minute
    max_attempts : integer, optional
        Maximal number of attempts per request
    backoff : float, optional
        Initial waiting time in seconds before a retry, doubled on every
        further retry
    parallel : integer, optional
        Number of concurrent requests
    response_path : string, optional
        Dot separated location of the completion text in the response body
    headers : dictionary, optional
        Additional request headers, ``{token}`` in a value is replaced by the
        token, which then replaces the bearer authorization
    body_template : dictionary, optional
        Request body with the placeholders ``{model}``, ``{prompt}``,
        ``{temperature}`` and ``{max_tokens}`` in its strings, a string
        consisting of one placeholder takes the value with its type
    cache_dir : string, optional
        Response cache directory, caching is disabled if empty
    timeout : float, optional
        Request timeout in seconds
    transport : httpx.BaseTransport, optional
        Custom transport
    """
    def __init__(self, url, model, token_env="", temperature=0.0, max_tokens=1024, rate_limit=60, max_attempts=5, backoff=1.0, parallel=1, response_path="choices.0.message.content", headers=None, body_template=None, cache_dir="", timeout=120, transport=None):
        if rate_limit <= 0:
            raise ValueError("Rate limit must be positive")
        if max_attempts < 1:
            raise ValueError("At least one attempt is needed")
        if parallel < 1:
            raise ValueError("At least one parallel request is needed")

        self._url = url
        self._model = model
        self._token_env = token_env
        self._params = {"temperature": float(temperature), "max_tokens": int(max_tokens)}
        self._rate_limit = float(rate_limit)
        self._max_attempts = int(max_attempts)
        self._backoff = float(backoff)
        self._parallel = int(parallel)
        self._response_path = response_path
        self._extra_headers = dict(headers) if headers else {}
        self._body_template = body_template
        self._cache_dir = cache_dir
        self._timeout = timeout
        self._transport = transport

        self._requests = 0
        self._next_slot = 0.0
        self._lock = threading.Lock()

        if cache_dir:
            utils.mkdirp(cache_dir)

    def __repr__(self):
        return "Endpoint("+self._model+")"

    @classmethod
    def from_config(cls, section, cache_dir="", transport=None):
        """Create an endpoint from a configuration section.

        Parameters
        ----------
        section : dictionary
            Endpoint keys of the configuration file
        cache_dir : string, optional
            Response cache directory
        transport : httpx.BaseTransport, optional
            Custom transport

        Returns
        -------
        endpoint : Endpoint
            Endpoint
        """
        if "url" not in section or "model" not in section:
            raise ValueError("Endpoint configuration needs url and model")
        kwargs = {}
        for key, cast in [("token_env", str), ("temperature", float), ("max_tokens", int), ("rate_limit", float),
                          ("max_attempts", int), ("backoff", float), ("parallel", int), ("response_path", str)]:
            if key in section:
                kwargs[key] = cast(section[key])
        if "headers" in section:
            kwargs["headers"] = parse_headers(section["headers"])
        if "body_template" in section:
            try:
                kwargs["body_template"] = json.loads(section["body_template"])
            except json.JSONDecodeError as e:
                raise ValueError("Endpoint key body_template is not valid JSON - "+str(e))
        return cls(section["url"], section["model"], cache_dir=cache_dir, transport=transport, **kwargs)


    ##################
    # Getter Methods #
    ##################
    def get_model(self):
        """Return the model identifier."""
        return self._model

    def get_params(self):
        """Return the request parameters."""
        return dict(self._params)

    def get_parallel(self):
        """Return the number of concurrent requests."""
        return self._parallel

    def get_requests(self):
        """Return the number of sent requests."""
        return self._requests


    ############
    # Requests #
    ############
    def client(self):
        """Create an HTTP client for this endpoint.

        Returns
        -------
        client : httpx.Client
            Client, to be closed by the caller
        """
        return httpx.Client(timeout=self._timeout, transport=self._transport)

    def body(self, prompt):
        """Return the request body of a prompt.

        Parameters
        ----------
        prompt : string
            Prompt

        Returns
        -------
        body : dictionary
            Chat request body
        """
        if self._body_template is None:
            return {"model": self._model, "messages": [{"role": "user", "content": prompt}], **self._params}
        return _fill(self._body_template, {"model": self._model, "prompt": prompt, **self._params})

    def cache_link(self, prompt):
        """Return the cache file of a prompt.

        Parameters
        ----------
        prompt : string
            Prompt

        Returns
        -------
        link : string
            Cache file link, empty if caching is disabled
        """
        if not self._cache_dir:
            return ""
        key = json.dumps({"model": self._model, "prompt": prompt, "params": self._params}, sort_keys=True)
        return os.path.join(self._cache_dir, utils.sha256_text(key)+".json")

    def _headers(self):
        token = ""
        if self._token_env:
            token = os.environ.get(self._token_env, "")
            if not token:
                raise CredentialError("Environment variable "+self._token_env+" holding the token is not set")

        headers = {"Content-Type": "application/json"}
        if token and not any("{token}" in value for value in self._extra_headers.values()):
            headers["Authorization"] = "Bearer "+token
        for name, value in self._extra_headers.items():
            headers[name] = value.replace("{token}", token)
        return headers

    def _wait(self):
        with self._lock:
            now = time.monotonic()
            slot = max(now, self._next_slot)
            self._next_slot = slot+60/self._rate_limit
            self._requests += 1
        if slot > now:
            time.sleep(slot-now)

    def _completion(self, data):
        try:
            for key in self._response_path.split("."):
                data = data[int(key)] if isinstance(data, list) else data[key]
        except (KeyError, IndexError, ValueError, TypeError):
            raise TransportError("Response has no completion at "+self._response_path)
        return data


def parse_headers(text):
    """Parse header lines of the form ``Name: value``.

    Parameters
    ----------
    text : string
        One header per line

    Returns
    -------
    headers : dictionary
        Header name and value
    """
    headers = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        name, sep, value = line.partition(":")
        if not sep or not name.strip():
            raise ValueError("Invalid header line "+repr(line.strip()))
        headers[name.strip()] = value.strip()
    return headers


def _fill(template, values):
    if isinstance(template, dict):
        return {key: _fill(value, values) for key, value in template.items()}
    if isinstance(template, list):
        return [_fill(value, values) for value in template]
    if isinstance(template, str):
        match = re.fullmatch(r"\{(\w+)\}", template)
        if match and match.group(1) in values:
            return values[match.group(1)]
        return re.sub(r"\{(\w+)\}", lambda m: str(values[m.group(1)]) if m.group(1) in values else m.group(0), template)
    return template


def query_model(endpoint, prompt, client=None):
    """Send a prompt to an endpoint and return the completion text.

    Cached prompts are answered from the cache without a request. Rate
    limit errors (429), server errors (5xx), bodies that are not JSON and
    transport failures are retried with exponential backoff.

    Parameters
    ----------
    endpoint : Endpoint
        Model endpoint
    prompt : string
        Prompt
    client : httpx.Client, optional
        Shared client, a new one is created if not given

    Returns
    -------
    text : string
        Completion text
    """
    # Cache lookup
    link = endpoint.cache_link(prompt)
    if link and os.path.isfile(link):
        with open(link, "r", encoding="utf-8") as file_in:
            return json.load(file_in)["response"]

    if client is None:
        with endpoint.client() as own:
            return query_model(endpoint, prompt, own)

    headers = endpoint._headers()
    body = endpoint.body(prompt)

    text = None
    for attempt in range(endpoint._max_attempts):
        if attempt:
            time.sleep(endpoint._backoff*2**(attempt-1))
        endpoint._wait()

        try:
            response = client.post(endpoint._url, json=body, headers=headers)
        except httpx.TransportError as e:
            logger.warning("Request to %s failed (%s), attempt %i/%i", endpoint.get_model(), type(e).__name__, attempt+1, endpoint._max_attempts)
            continue

        status = response.status_code
        if status in [401, 403]:
            raise CredentialError("Endpoint rejected the credentials with status "+str(status))
        if status == 429 or status >= 500:
            logger.warning("Endpoint %s returned status %i, attempt %i/%i", endpoint.get_model(), status, attempt+1, endpoint._max_attempts)
            continue
        if status >= 400:
            raise TransportError("Endpoint returned status "+str(status))

        try:
            data = response.json()
        except ValueError:
            logger.warning("Endpoint %s returned a body that is not JSON, attempt %i/%i", endpoint.get_model(), attempt+1, endpoint._max_attempts)
            continue
        text = endpoint._completion(data)
        break

    if text is None:
        raise TransportError("Request to "+endpoint.get_model()+" failed after "+str(endpoint._max_attempts)+" attempts")

    # Atomic cache write
    if link:
        temp = link+"."+str(threading.get_ident())+".tmp"
        with open(temp, "w", encoding="utf-8") as file_out:
            json.dump({"request": body, "response": text}, file_out, ensure_ascii=False, sort_keys=True)
        with endpoint._lock:
            os.replace(temp, link)
        logger.debug("Cached response %s", os.path.basename(link))

    return text


##########
# Answer #
##########
def normalize(name):
    """Normalize a name for matching.

    Parameters
    ----------
    name : string
        Name

    Returns
    -------
    name : string
        Lowercase name with single spaces
    """
    return " ".join(name.replace("`", "").replace("\"", "").split()).lower()


def _clean(line):
    line = line.replace("`", "").strip()
    while line[:1] in ["-", "*"] and not line.startswith("->"):
        line = line[1:].strip()
    return line


def _parse(raw, task):
    if not isinstance(raw, str):
        return None
    markers = list(re.finditer(r"answer:", raw, re.IGNORECASE))
    if not markers:
        return None

    lines = [_clean(line) for line in raw[markers[-1].end():].splitlines()]
    lines = [line for line in lines if line]

    entries = []
    states = {}
    for line in lines:
        key, sep, value = line.partition(":")
        key = key.strip().lower()
        value = value.strip()

        if task in ["CP", "BA"]:
            if sep and key == "pair":
                cause, arrow, effect = value.partition("=>")
                if not arrow or not cause.strip() or not effect.strip():
                    return None
                entries.append({"pair": (normalize(cause), normalize(effect)), "paths": [], "none": False, "adjust": None})
                continue

            is_path = task == "CP" and (line.lower() == "none" or (bool(sep) and key == "path"))
            is_adjust = task == "BA" and bool(sep) and key == "adjust"
            if not entries and (is_path or is_adjust):
                entries.append({"pair": None, "paths": [], "none": False, "adjust": None})

            if is_path:
                if line.lower() == "none" or value.lower() == "none":
                    entries[-1]["none"] = True
                else:
                    path = tuple(normalize(x) for x in value.split("->"))
                    if len(path) < 2 or not all(path):
                        return None
                    entries[-1]["paths"].append(path)
                continue

            if is_adjust:
                if not (value.startswith("{") and value.endswith("}")) or entries[-1]["adjust"] is not None:
                    return None
                entries[-1]["adjust"] = frozenset(normalize(x) for x in value[1:-1].split(",") if x.strip())
                continue

        else:
            name, sep, state = line.rpartition(":")
            state = " ".join(state.split()).lower()
            if sep and name.strip() and state in ["happens", "does not happen"]:
                name = normalize(name)
                if name in states and states[name] != (state == "happens"):
                    return None
                states[name] = state == "happens"
                continue

        # Trailing text ends the block
        break

    if task in ["FI", "CI"]:
        return states if states else None

    if not entries:
        return None
    for entry in entries:
        if task == "CP" and entry["none"] and entry["paths"]:
            return None
        if task == "CP" and not entry["none"] and not entry["paths"]:
            return None
        if task == "BA" and entry["adjust"] is None:
            return None
    if task == "CP":
        return [{"pair": e["pair"], "paths": sorted(set(e["paths"]))} for e in entries]
    return [{"pair": e["pair"], "adjust": e["adjust"]} for e in entries]


def extract_answer(raw, task, extractor=None):
    """Extract the answer from a completion.

    The last ``ANSWER:`` block is parsed line by line. List markers and
    backticks are ignored, names are normalized with :func:`normalize`.

    * **CP** - ``pair: A => B`` headers, each followed by ``path: A -> C -> B``
      lines or ``none``
    * **BA** - ``pair: A => B`` headers, each followed by ``adjust: {C, D}``
    * **FI**, **CI** - ``A: happens`` or ``A: does not happen`` lines

    The pair header may be omitted for a single pair. The block ends at the
    first line not following the grammar.

    Parameters
    ----------
    raw : string
        Completion text
    task : string
        Task kind
    extractor : function, optional
        Secondary extractor ``extractor(raw, task)`` returning a rewritten
        completion, used if the raw completion does not parse

    Returns
    -------
    answer : list, dictionary, None
        Entries with keys **pair** and **paths** (CP) or **adjust** (BA),
        name to state dictionary (FI, CI), None if nothing could be parsed
    """
    answer = _parse(raw, task)
    if answer is None and extractor is not None:
        answer = _parse(extractor(raw, task), task)
    return answer


def format_answer(question, truth=None):
    """Write an answer block.

    Parameters
    ----------
    question : Question
        Benchmark question
    truth : dictionary, optional
        Answer in ground truth form, the ground truth of the question by
        default

    Returns
    -------
    text : string
        Answer block starting with ``ANSWER:``
    """
    truth = question.get_truth() if truth is None else truth
    names = question.get_names()
    task = question.get_task()

    lines = ["ANSWER:"]
    if task in ["CP", "BA"]:
        for (x, y), value in truth.items():
            lines.append("pair: "+names[x]+" => "+names[y])
            if task == "CP":
                lines += ["path: "+" -> ".join(names[v] for v in path.nodes) for path in value] if value else ["none"]
            else:
                lines.append("adjust: {"+", ".join(names[v] for v in sorted(value.minimal_sets[0]))+"}")
    else:
        for v, state in truth.items():
            lines.append(names[v]+(": happens" if state else ": does not happen"))
    return "\n".join(lines)


def score(answer, question, mode="minimal"):
    """Score an extracted answer by exact match.

    * **CP** - the answered path set of every pair equals the true one
    * **BA** - for every pair the answered set is one of the minimal sets
      (``minimal``) or passes the backdoor criterion (``valid``)
    * **FI**, **CI** - every queried node has the true state

    Parameters
    ----------
    answer : list, dictionary, None
        Answer from :func:`extract_answer`
    question : Question
        Benchmark question
    mode : string, optional
        BA scoring mode **minimal** or **valid**

    Returns
    -------
    verdict : string
        **correct**, **incorrect** or **unparsed**
    """
    if mode not in SCORE_MODES:
        raise ValueError("Unknown scoring mode "+repr(mode))
    if answer is None:
        return "unparsed"

    ids = {normalize(name): v for v, name in enumerate(question.get_names())}
    truth = question.get_truth()
    task = question.get_task()

    if task in ["FI", "CI"]:
        states = {ids[name]: state for name, state in answer.items() if name in ids}
        return "correct" if all(states.get(q) == state for q, state in truth.items()) else "incorrect"

    # Map answered pairs
    pairs = list(truth.keys())
    answered = {}
    for entry in answer:
        if entry["pair"] is None:
            if len(pairs) != 1 or len(answer) != 1:
                return "incorrect"
            pair = pairs[0]
        else:
            if entry["pair"][0] not in ids or entry["pair"][1] not in ids:
                return "incorrect"
            pair = (ids[entry["pair"][0]], ids[entry["pair"][1]])
        if pair in answered:
            return "incorrect"

        try:
            if task == "CP":
                answered[pair] = {tuple(ids[name] for name in path) for path in entry["paths"]}
            else:
                answered[pair] = frozenset(ids[name] for name in entry["adjust"])
        except KeyError:
            return "incorrect"

    if set(answered.keys()) != set(pairs):
        return "incorrect"

    for (x, y), value in answered.items():
        if task == "CP":
            is_match = value == {path.nodes for path in truth[(x, y)]}
        elif mode == "minimal":
            is_match = value in truth[(x, y)].minimal_sets
        else:
            is_match = x not in value and y not in value and oracle.is_valid_adjustment_set(question.get_graph(), x, y, value)
        if not is_match:
            return "incorrect"

    return "correct"


class MockModel:
    """This class answers prompts without a model for testing the
    evaluation pipeline.

    * **oracle** - answers the ground truth
    * **negate** - answers a guaranteed wrong answer, negated states for FI
      and CI, swapped path existence for CP and the effect as control set
      for BA
    * **garbage** - answers without an answer block

    Parameters
    ----------
    kind : string
        Mock kind
    """
    KINDS = ["oracle", "negate", "garbage"]

    def __init__(self, kind):
        if kind not in self.KINDS:
            raise ValueError("Unknown mock model "+repr(kind))
        self._kind = kind
        self._requests = 0

    def __repr__(self):
        return "MockModel("+self._kind+")"

    def get_model(self):
        """Return the model identifier."""
        return "mock-"+self._kind

    def get_requests(self):
        """Return the number of answered prompts."""
        return self._requests

    def complete(self, prompt, question):
        """Answer a prompt.

        Parameters
        ----------
        prompt : string
            Rendered prompt
        question : Question
            Question the prompt was rendered from

        Returns
        -------
        text : string
            Completion text
        """
        self._requests += 1
        if self._kind == "garbage":
            return "The relations are too complex to give a definite answer."

        truth = question.get_truth()
        if self._kind == "negate":
            task = question.get_task()
            graph = question.get_graph()
            if task in ["FI", "CI"]:
                truth = {v: not state for v, state in truth.items()}
            elif task == "CP":
                truth = {(x, y): ([] if paths else [oracle.make_path(graph, [x, y])]) for (x, y), paths in truth.items()}
            else:
                truth = {(x, y): oracle.AdjustmentSets(x, y, (frozenset([y]),)) for (x, y) in truth}

        return "Let me work through the relations.\n\n"+format_answer(question, truth)


##############
# Evaluation #
##############
def _keys(question):
    params = question.get_params()
    gen = question.get_graph().get_params()
    return {"id": question.get_id(),
            "task": question.get_task(),
            "shape": graph_mod.shape_tag(question.get_graph().get_shape()),
            "iterations": gen.get("iterations", 0),
            "ce_d": params.get("ce_d"),
            "wi_n": params.get("wi_n"),
            "name_style": naming.style_tag(question.get_style())}


def run(questions, model, styles=["zero-shot"], bank=None, mode="minimal", extractor=None, n_print=100):
    """Evaluate a model on questions for the given prompt styles.

    Endpoint requests run in a thread pool sized by the endpoint
    parallelism.

    Parameters
    ----------
    questions : list
        Benchmark questions
    model : Endpoint, MockModel
        Model to evaluate
    styles : list, optional
        Prompt styles
    bank : ExemplarBank, optional
        Worked examples, the bundled ones are used by default
    mode : string, optional
        BA scoring mode
    extractor : function, optional
        Secondary answer extractor
    n_print : integer, optional
        Number of prompts between progress outputs, zero to disable

    Returns
    -------
    results : list
        Result dictionary per question and style with keys **id**,
        **model**, **prompt**, **raw**, **parsed**, **verdict** and the
        grouping keys **task**, **shape**, **iterations**, **ce_d**,
        **wi_n** and **name_style**
    """
    bank = bank if bank is not None else prompt_mod.ExemplarBank()
    jobs = [(q, style, prompt_mod.render_prompt(q, style, bank)) for style in styles for q in questions]

    t = utils.tic()
    raws = []
    if isinstance(model, Endpoint):
        with model.client() as client:
            with concurrent.futures.ThreadPoolExecutor(max_workers=model.get_parallel()) as pool:
                futures = [pool.submit(query_model, model, text, client) for q, style, text in jobs]
                for i, future in enumerate(futures):
                    raws.append(future.result())
                    if n_print and ((i+1) % n_print == 0 or i+1 == len(jobs)):
                        sys.stdout.write("Evaluated "+str(i+1)+"/"+str(len(jobs))+" prompts...\r")
                        sys.stdout.flush()
    else:
        for i, (q, style, text) in enumerate(jobs):
            raws.append(model.complete(text, q))
            if n_print and ((i+1) % n_print == 0 or i+1 == len(jobs)):
                sys.stdout.write("Evaluated "+str(i+1)+"/"+str(len(jobs))+" prompts...\r")
                sys.stdout.flush()
    if n_print and jobs:
        print()
        utils.toc(t, message="Evaluation of "+model.get_model())

    results = []
    for (q, style, text), raw in zip(jobs, raws):
        parsed = extract_answer(raw, q.get_task(), extractor)
        result = _keys(q)
        result.update({"model": model.get_model(), "prompt": style, "raw": raw, "parsed": parsed, "verdict": score(parsed, q, mode)})
        results.append(result)

    return results


###########
# Reports #
###########
def _check_dims(dims):
    if not dims:
        raise ValueError("At least one dimension is needed")
    for dim in dims:
        if dim not in DIMS:
            raise ValueError("Unknown dimension "+repr(dim)+", expected one of "+", ".join(DIMS))


def tally(results, dims):
    """Count verdicts per group.

    Parameters
    ----------
    results : list
        Results from :func:`run`
    dims : list
        Grouping keys

    Returns
    -------
    table : DataFrame
        One row per group with columns **correct**, **incorrect**,
        **unparsed** and **total**, missing keys are shown as ``-``
    """
    _check_dims(dims)
    rows = []
    for result in results:
        row = {dim: ("-" if result.get(dim) is None else str(result[dim])) for dim in dims}
        row.update({verdict: int(result["verdict"] == verdict) for verdict in VERDICTS})
        rows.append(row)

    if not rows:
        return pd.DataFrame(columns=dims+VERDICTS+["total"])

    frame = pd.DataFrame(rows).groupby(dims, as_index=False)[VERDICTS].sum()
    frame["total"] = frame[VERDICTS].sum(axis=1)
    return frame


def aggregate(results, dims):
    """Create an accuracy table in percent.

    The last dimension becomes the columns, the remaining ones the rows.
    Every row is completed by the macro average over its cells, the micro
    average over its pooled questions and the number of unparsed answers.
    Empty cells are NaN.

    Parameters
    ----------
    results : list
        Results from :func:`run`
    dims : list
        Grouping keys

    Returns
    -------
    table : DataFrame
        Accuracy table
    """
    frame = tally(results, dims)
    rows = dims[:-1] if len(dims) > 1 else ["all"]
    frame["all"] = "all"
    if frame.empty:
        return pd.DataFrame(columns=["macro", "micro", "unparsed"])

    frame["accuracy"] = 100*frame["correct"]/frame["total"]
    table = frame.pivot_table(index=rows, columns=dims[-1], values="accuracy", aggfunc="first")
    table.columns = [str(x) for x in table.columns]
    cells = list(table.columns)

    pooled = frame.groupby(rows)[["correct", "total", "unparsed"]].sum()
    table["macro"] = table[cells].mean(axis=1)
    table["micro"] = 100*pooled["correct"]/pooled["total"]
    table = table.round(2)
    table["unparsed"] = pooled["unparsed"]

    return table


def plot_accuracy(results, x, hue=None, kwargs={}):
    """Plot the accuracy over a grouping key.

    Parameters
    ----------
    results : list
        Results from :func:`run`
    x : string
        Grouping key on the x-axis
    hue : string, optional
        Grouping key of the lines
    kwargs: dict, optional
        Dictionary with plotting parameters
    """
    dims = [x]+([hue] if hue else [])
    frame = tally(results, dims)
    frame["accuracy"] = 100*frame["correct"]/frame["total"]

    sns.lineplot(data=frame, x=x, y="accuracy", hue=hue, marker="o", **kwargs)
    plt.xlabel(x)
    plt.ylabel("Accuracy (%)")
