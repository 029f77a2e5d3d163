################################################################################
# Store Module                                                                 #
#                                                                              #
"""Assembly of complete benchmarks, record files and complexity reports."""
################################################################################


import os
import sys
import json
import logging
import configparser
import multiprocessing as mp

import numpy as np
import pandas as pd

import causgen.utils as utils
import causgen.graph as graph_mod
import causgen.scm as scm_mod
import causgen.oracle as oracle
import causgen.naming as naming
import causgen.question as question_mod

from causgen.question import Question


logger = logging.getLogger(__name__)

GROUPS = [["CP", "BA"], ["FI", "CI"]]
STAT_KEYS = ["ind", "ch", "fo", "co"]


class RecordError(ValueError):
    """Raised for malformed record files and inconsistent manifests."""


##########
# Config #
##########
def _floats(text):
    return [float(x) for x in text.split(",") if x.strip()]


def _ints(text):
    return [int(x) for x in text.split(",") if x.strip()]


def load_config(link="", seed=None):
    """Read a benchmark configuration file.

    Parameters
    ----------
    link : string, optional
        Link to configuration file or name of a bundled one such as
        ``names.cfg``, the bundled default is used if empty
    seed : integer, optional
        Master seed overriding the file value

    Returns
    -------
    config : dictionary
        Benchmark settings with keys **seed**, **probs**, **iterations**,
        **graphs**, **max_size**, **max_candidates**,
        **max_paths_per_pair**, **max_total_paths**, **tasks** and
        **endpoints**
    """
    link = link if link else utils.data_link("default.cfg")
    if not os.path.isfile(link) and os.path.isfile(utils.data_link(link)):
        link = utils.data_link(link)
    parser = configparser.ConfigParser(interpolation=None)
    try:
        with open(link, "r", encoding="utf-8") as file_in:
            parser.read_file(file_in)
    except configparser.Error as e:
        raise ValueError("Invalid configuration file "+link+" - "+str(e).splitlines()[0])

    if "benchmark" not in parser:
        raise ValueError("Configuration file "+link+" has no [benchmark] section")
    section = parser["benchmark"]

    try:
        config = {"seed": int(section.get("seed", "0")) if seed is None else int(seed),
                  "probs": _floats(section.get("probs", "0.1, 0.1, 0.1")),
                  "graphs": int(section.get("graphs", "50")),
                  "max_size": int(section.get("max_size", "4")),
                  "max_candidates": int(section.get("max_candidates", "24")),
                  "max_paths_per_pair": int(section.get("max_paths_per_pair", "20")),
                  "max_total_paths": int(section.get("max_total_paths", "60"))}
        bounds = _ints(section.get("iterations", "3, 6"))
    except ValueError as e:
        raise ValueError("Invalid value in [benchmark] of "+link+" - "+str(e))

    # Check benchmark values
    if len(config["probs"]) != 3 or any(p < 0 or p > 1 for p in config["probs"]):
        raise ValueError("Key probs needs three probabilities")
    if len(bounds) != 2 or bounds[0] < 0 or bounds[0] > bounds[1]:
        raise ValueError("Key iterations needs a minimum and maximum")
    if config["graphs"] < 1:
        raise ValueError("Key graphs must be at least 1")
    config["iterations"] = list(range(bounds[0], bounds[1]+1))

    # Tasks
    config["tasks"] = {}
    for task in question_mod.TASKS:
        if task.lower() not in parser:
            continue
        section = parser[task.lower()]
        settings = {"shapes": [graph_mod.parse_shape(x) for x in section.get("shapes", "").split(",") if x.strip()],
                    "name_styles": [naming.parse_style(x) for x in section.get("name_styles", "random").split(",") if x.strip()]}
        if not settings["shapes"]:
            raise ValueError("Section ["+task.lower()+"] lists no shapes")
        for shape in settings["shapes"]:
            if len(shape) < 5:
                raise ValueError("Benchmark shape "+graph_mod.shape_tag(shape)+" needs at least 5 tiers")

        allowed = ["random", "plain"] if task in ["CP", "BA"] else ["random", "change"]
        for style in settings["name_styles"]:
            if style.kind not in allowed:
                raise ValueError("Name style "+naming.style_tag(style)+" is not available for task "+task)

        if task in ["CP", "BA"]:
            settings["ce_d"] = float(section.get("ce_d", "1"))
            settings["ce_d_long"] = float(section["ce_d_long"]) if "ce_d_long" in section else None
            settings["long_tiers"] = int(section.get("long_tiers", "6"))
        elif task == "CI":
            settings["wi_n"] = _ints(section.get("wi_n", "1"))
        config["tasks"][task] = settings

    if not config["tasks"]:
        raise ValueError("Configuration file "+link+" has no task section")

    # Endpoints
    config["endpoints"] = {name.partition(".")[2]: dict(parser[name]) for name in parser.sections() if name.startswith("endpoint.")}

    return config


def config_hash(config):
    """Return a hash identifying the benchmark settings of a configuration.

    Parameters
    ----------
    config : dictionary
        Configuration from :func:`load_config`

    Returns
    -------
    digest : string
        SHA-256 hex digest
    """
    settings = {key: value for key, value in config.items() if key != "endpoints"}
    text = json.dumps(settings, sort_keys=True, default=lambda x: naming.style_tag(x) if isinstance(x, naming.NameStyle) else str(x))
    return utils.sha256_text(text)


#########
# Files #
#########
def write_records(link, records):
    """Write records as JSON lines with sorted keys.

    Parameters
    ----------
    link : string
        File link
    records : list
        Record dictionaries
    """
    with open(link, "w", encoding="utf-8", newline="\n") as file_out:
        for record in records:
            file_out.write(json.dumps(record, sort_keys=True, ensure_ascii=False)+"\n")


def read_records(link):
    """Read a JSON lines record file.

    Parameters
    ----------
    link : string
        File link

    Returns
    -------
    records : list
        Record dictionaries
    """
    records = []
    with open(link, "r", encoding="utf-8") as file_in:
        for i, line in enumerate(file_in):
            try:
                record = json.loads(line)
            except json.JSONDecodeError:
                raise RecordError("Line "+str(i+1)+" of "+link+" is not a valid record")
            if not isinstance(record, dict):
                raise RecordError("Line "+str(i+1)+" of "+link+" is not a record")
            if record.get("schema_version") != question_mod.SCHEMA_VERSION:
                raise RecordError("Line "+str(i+1)+" of "+link+" has unknown schema version "+repr(record.get("schema_version")))
            records.append(record)
    return records


def read_manifest(directory):
    """Read a benchmark manifest and check it against its record files.

    Parameters
    ----------
    directory : string
        Benchmark directory

    Returns
    -------
    manifest : dictionary
        Manifest
    """
    link = os.path.join(directory, "manifest.json")
    if not os.path.isfile(link):
        raise RecordError("Directory "+directory+" has no manifest")
    with open(link, "r", encoding="utf-8") as file_in:
        manifest = json.load(file_in)

    for task, entry in manifest["files"].items():
        file_link = os.path.join(directory, entry["file"])
        if not os.path.isfile(file_link):
            raise RecordError("Record file "+entry["file"]+" is missing")
        num = len(read_records(file_link))
        if num != entry["records"]:
            raise RecordError("Record file "+entry["file"]+" has "+str(num)+" records, manifest states "+str(entry["records"]))
        if utils.sha256(file_link) != entry["sha256"]:
            raise RecordError("Record file "+entry["file"]+" does not match its checksum")

    return manifest


def load_questions(directory, tasks=None):
    """Load the questions of a benchmark.

    Parameters
    ----------
    directory : string
        Benchmark directory
    tasks : list, optional
        Tasks to load, all by default

    Returns
    -------
    questions : list
        Questions in file order
    """
    manifest = read_manifest(directory)
    questions = []
    for task, entry in manifest["files"].items():
        if tasks is None or task in tasks:
            questions += [Question.from_record(record) for record in read_records(os.path.join(directory, entry["file"]))]
    return questions


############
# Assembly #
############
def _mean_stats(records):
    """Mean complexity over the distinct graphs of records per shape."""
    graphs = {}
    for record in records:
        tag = graph_mod.shape_tag(record["shape"])
        graphs.setdefault(tag, {})[(record["iterations"], record["seed"])] = record["stats"]

    stats = {}
    for tag, values in graphs.items():
        stats[tag] = {key: float(np.mean([x[key] for x in values.values()])) for key in STAT_KEYS}
        stats[tag]["graphs"] = len(values)
    return stats


def _build_unit(config, group, shape, n_print):
    """Build all questions of a scenario group on one shape."""
    tasks = [task for task in GROUPS[group] if task in config["tasks"] and shape in config["tasks"][task]["shapes"]]
    lexicon = naming.Lexicon()
    records = {task: [] for task in tasks}
    counts = {task: {} for task in tasks}
    tag = graph_mod.shape_tag(shape)

    def count(task, variant, style, is_kept):
        entry = counts[task].setdefault((variant, naming.style_tag(style)), [0, 0])
        entry[0] += 1
        entry[1] += int(is_kept)

    num = len(config["iterations"])*config["graphs"]
    for i, (it, k) in enumerate([(it, k) for it in config["iterations"] for k in range(config["graphs"])]):
        seed = utils.derive_seed(config["seed"], group, len(shape), *shape, it, k)
        graph = graph_mod.generate_graph(shape, it, config["probs"], seed)
        scm = scm_mod.generate_functions(graph, seed) if group == 1 else None

        for task in tasks:
            settings = config["tasks"][task]
            for style in settings["name_styles"]:
                names = naming.assign_names(graph, style, lexicon, seed)

                if task in ["CP", "BA"]:
                    ce_ds = [settings["ce_d"]]
                    if settings["ce_d_long"] is not None and len(shape) >= settings["long_tiers"]:
                        ce_ds.append(settings["ce_d_long"])
                    for ce_d in ce_ds:
                        try:
                            if task == "CP":
                                q = question_mod.build_cp_question(graph, names, ce_d, style=style)
                            else:
                                q = question_mod.build_ba_question(graph, names, ce_d, style=style, max_size=config["max_size"], max_candidates=config["max_candidates"])
                        except oracle.BudgetError as e:
                            logger.warning("Discarded %s question on %s with seed %i - %s", task, tag, seed, e)
                            count(task, ce_d, style, False)
                            continue
                        is_kept = question_mod.complexity_filter(q, config["max_paths_per_pair"], config["max_total_paths"])
                        if is_kept:
                            records[task].append(q.to_record())
                        count(task, ce_d, style, is_kept)
                elif task == "FI":
                    count(task, None, style, True)
                    records[task].append(question_mod.build_fi_question(scm, names, seed, style=style).to_record())
                else:
                    for wi_n in settings["wi_n"]:
                        count(task, wi_n, style, True)
                        records[task].append(question_mod.build_ci_question(scm, names, wi_n, seed, style=style).to_record())

        if n_print and ((i+1) % n_print == 0 or i+1 == num):
            sys.stdout.write("Shape "+tag+" - generated "+str(i+1)+"/"+str(num)+" graphs...\r")
            sys.stdout.flush()

    if n_print:
        print()

    return {"records": records, "counts": counts}


def assemble(config, out, is_parallel=False, np=0, n_print=50):
    """Assemble a benchmark.

    For every configured shape, iteration number and graph index one graph
    is generated from a seed derived from the master seed. CP and BA
    questions share their graphs, FI and CI questions share their models
    and observations. CP and BA questions are passed through the
    complexity filter, BA questions whose adjustment search exceeds its
    budget are discarded. Records are written per task together with a
    manifest.

    Parameters
    ----------
    config : dictionary
        Configuration from :func:`load_config`
    out : string
        Empty or missing output directory
    is_parallel : bool, optional
        True to build one scenario group and shape per process
    np : integer, optional
        Number of processes, all cores by default
    n_print : integer, optional
        Number of graphs between progress outputs, zero to disable

    Returns
    -------
    manifest : dictionary
        Manifest with keys **config_hash**, **seed**, **schema_version**,
        **counts**, **stats** and **files**. The counts list the generated
        and kept questions per task, shape, ce_d or wi_n and name style,
        the stats the mean complexity per task and shape.
    """
    if os.path.isdir(out) and os.listdir(out):
        raise ValueError("Output directory "+out+" is not empty")

    # Work units in configuration order
    units = []
    for group, tasks in enumerate(GROUPS):
        shapes = []
        for task in tasks:
            for shape in config["tasks"].get(task, {}).get("shapes", []):
                if shape not in shapes:
                    shapes.append(shape)
        units += [(group, shape) for shape in shapes]

    t = utils.tic()
    if is_parallel and len(units) > 1:
        np = np if np and np <= mp.cpu_count() else mp.cpu_count()
        with mp.Pool(processes=len(units) if len(units) < np else np) as pool:
            results = [pool.apply_async(_build_unit, args=(config, group, shape, 0)) for group, shape in units]
            results = [res.get() for res in results]
    else:
        results = [_build_unit(config, group, shape, n_print) for group, shape in units]

    # Merge
    records = {task: [] for task in question_mod.TASKS if task in config["tasks"]}
    counts = {task: [] for task in records}
    for (group, shape), result in zip(units, results):
        for task, task_records in result["records"].items():
            records[task] += task_records
            variant = "ce_d" if task in ["CP", "BA"] else "wi_n"
            for (value, style), (generated, kept) in result["counts"][task].items():
                counts[task].append({"shape": graph_mod.shape_tag(shape), "ce_d": None, "wi_n": None, variant: value,
                                     "name_style": style, "generated": generated, "kept": kept})

    # Write files
    utils.mkdirp(out)
    files = {}
    for task, task_records in records.items():
        file_name = task.lower()+".jsonl"
        write_records(os.path.join(out, file_name), task_records)
        files[task] = {"file": file_name, "records": len(task_records), "sha256": utils.sha256(os.path.join(out, file_name))}

    manifest = {"config_hash": config_hash(config),
                "seed": config["seed"],
                "schema_version": question_mod.SCHEMA_VERSION,
                "counts": counts,
                "stats": {task: _mean_stats(task_records) for task, task_records in records.items()},
                "files": files}
    with open(os.path.join(out, "manifest.json"), "w", encoding="utf-8", newline="\n") as file_out:
        json.dump(manifest, file_out, indent=2, sort_keys=True)
        file_out.write("\n")

    if n_print:
        utils.toc(t, message="Assembled "+str(sum(len(x) for x in records.values()))+" questions")

    return manifest


###########
# Reports #
###########
def stats_report(manifest):
    """Create the complexity table of a benchmark.

    Parameters
    ----------
    manifest : dictionary
        Benchmark manifest

    Returns
    -------
    table : DataFrame
        One row per task, shape, ce_d or wi_n and name style with graph
        shape **GS**, number of kept questions **QN**, average indegree
        **IND** and mean chain **CH**, fork **FO** and collider **CO** counts
        of the shape
    """
    columns = ["Task", "GS", "ce_d", "wi_n", "Style", "QN", "IND", "CH", "FO", "CO"]
    rows = []
    for task in question_mod.TASKS:
        for entry in manifest["counts"].get(task, []):
            stats = manifest["stats"].get(task, {}).get(entry["shape"])
            values = [round(stats[key], 2) if stats else float("nan") for key in STAT_KEYS]
            rows.append([task, entry["shape"], entry["ce_d"], entry["wi_n"], entry["name_style"], entry["kept"]]+values)
    return pd.DataFrame(rows, columns=columns)


def verify(directory, n_print=0):
    """Recompute the ground truth and graph statistics of every record and
    the manifest statistics.

    Parameters
    ----------
    directory : string
        Benchmark directory
    n_print : integer, optional
        Number of records between progress outputs, zero to disable

    Returns
    -------
    mismatches : list
        Ids of records whose stored values differ, ``manifest`` if the
        manifest statistics differ
    """
    manifest = read_manifest(directory)
    mismatches = []
    for task, entry in manifest["files"].items():
        records = read_records(os.path.join(directory, entry["file"]))
        for i, record in enumerate(records):
            q = Question.from_record(record)
            if question_mod.solve(q) != q.get_truth() or graph_mod.complexity_stats(q.get_graph()) != record["stats"]:
                mismatches.append(record["id"])
            if n_print and ((i+1) % n_print == 0 or i+1 == len(records)):
                sys.stdout.write("Verified "+str(i+1)+"/"+str(len(records))+" "+task+" records...\r")
                sys.stdout.flush()
        if n_print:
            print()

        if _mean_stats(records) != manifest["stats"][task]:
            mismatches.append("manifest")

    return mismatches
