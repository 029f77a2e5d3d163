################################################################################
# Command Line Interface                                                       #
#                                                                              #
"""Command line entry point for generating, inspecting and evaluating
benchmarks."""
################################################################################


import os
import sys
import json
import logging
import argparse
import configparser

import matplotlib.pyplot as plt

import causgen.utils as utils
import causgen.store as store
import causgen.prompt as prompt_mod
import causgen.evaluate as evaluate
import causgen.question as question_mod


def _parser():
    parser = argparse.ArgumentParser(prog="causgen", description="Causal reasoning benchmark generator and evaluation harness.")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log informational messages")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    # Generation
    gen = sub.add_parser("gen", help="Assemble a benchmark")
    gen.add_argument("--config", default="", help="Configuration file or bundled names.cfg, the bundled default if omitted")
    gen.add_argument("--seed", type=int, required=True, help="Master seed")
    gen.add_argument("--out", required=True, help="Empty output directory")
    gen.add_argument("--parallel", action="store_true", help="Build shapes in parallel processes")
    gen.add_argument("--np", type=int, default=0, help="Number of processes")

    # Inspection
    stats = sub.add_parser("stats", help="Print the complexity table of a benchmark")
    stats.add_argument("--bench", required=True, help="Benchmark directory")
    stats.add_argument("--csv", default="", help="Write the table as CSV")

    verify = sub.add_parser("verify", help="Recompute all ground truths of a benchmark")
    verify.add_argument("--bench", required=True, help="Benchmark directory")

    solve = sub.add_parser("solve", help="Print the recomputed ground truth of a question")
    solve.add_argument("--bench", required=True, help="Benchmark directory")
    solve.add_argument("--id", required=True, help="Question id")

    prompt = sub.add_parser("prompt", help="Render a question as prompt")
    prompt.add_argument("--bench", required=True, help="Benchmark directory")
    prompt.add_argument("--id", required=True, help="Question id")
    prompt.add_argument("--style", default="zero-shot", choices=prompt_mod.STYLES, help="Prompt style")

    # Evaluation
    ev = sub.add_parser("eval", help="Evaluate a model on a benchmark")
    ev.add_argument("--bench", required=True, help="Benchmark directory")
    model = ev.add_mutually_exclusive_group(required=True)
    model.add_argument("--endpoint", help="Endpoint section name of the configuration file")
    model.add_argument("--mock", choices=evaluate.MockModel.KINDS, help="Mock model")
    ev.add_argument("--config", default="", help="Configuration file with the endpoint")
    ev.add_argument("--styles", default="zero-shot", help="Comma separated prompt styles")
    ev.add_argument("--tasks", default="", help="Comma separated tasks, all by default")
    ev.add_argument("--limit", type=int, default=0, help="Maximal number of questions per task")
    ev.add_argument("--mode", default="minimal", choices=evaluate.SCORE_MODES, help="Scoring mode of BA answers")
    ev.add_argument("--cache", default="", help="Response cache directory, <bench>/cache by default")
    ev.add_argument("--out", required=True, help="Result file")

    report = sub.add_parser("report", help="Aggregate evaluation results")
    report.add_argument("--results", required=True, nargs="+", help="Result files")
    report.add_argument("--dims", default="prompt,shape", help="Comma separated grouping keys, the last one gives the columns")
    report.add_argument("--csv", default="", help="Write the table as CSV")
    report.add_argument("--plot", default="", help="Save an accuracy plot over the first key")

    return parser


def _split(text):
    return [x.strip() for x in text.split(",") if x.strip()]


def _find(directory, question_id):
    manifest = store.read_manifest(directory)
    for entry in manifest["files"].values():
        for record in store.read_records(os.path.join(directory, entry["file"])):
            if record["id"] == question_id:
                return record
    raise ValueError("Question "+question_id+" not found in "+directory)


def _gen(args):
    config = store.load_config(args.config, seed=args.seed)
    manifest = store.assemble(config, args.out, is_parallel=args.parallel, np=args.np)
    for task, entry in manifest["files"].items():
        print(task+" - "+str(entry["records"])+" questions in "+entry["file"])
    return 0


def _stats(args):
    table = store.stats_report(store.read_manifest(args.bench))
    print(table.to_string(index=False))
    if args.csv:
        table.to_csv(args.csv, index=False)
    return 0


def _verify(args):
    mismatches = store.verify(args.bench, n_print=1000)
    if mismatches:
        raise ValueError(str(len(mismatches))+" records differ from their recomputation, first "+mismatches[0])
    print("All records match their recomputation")
    return 0


def _solve(args):
    record = _find(args.bench, args.id)
    q = question_mod.Question.from_record(record)
    solved = question_mod.Question(q.get_task(), q.get_graph(), q.get_names(), q.get_style(), q.get_params(), q.get_text(), question_mod.solve(q), q.get_scm())
    truth = solved.to_record()["ground_truth"]
    print(json.dumps(truth, sort_keys=True, ensure_ascii=False))
    if truth != record["ground_truth"]:
        raise ValueError("Stored ground truth of "+args.id+" differs from the recomputation")
    return 0


def _prompt(args):
    q = question_mod.Question.from_record(_find(args.bench, args.id))
    print(prompt_mod.render_prompt(q, args.style, prompt_mod.ExemplarBank()))
    return 0


def _eval(args):
    styles = _split(args.styles)
    for style in styles:
        prompt_mod.parse_prompt_style(style)
    tasks = _split(args.tasks) if args.tasks else None

    questions = store.load_questions(args.bench, tasks)
    if args.limit:
        counts = {}
        limited = []
        for q in questions:
            counts[q.get_task()] = counts.get(q.get_task(), 0)+1
            if counts[q.get_task()] <= args.limit:
                limited.append(q)
        questions = limited

    if args.mock:
        model = evaluate.MockModel(args.mock)
    else:
        config = store.load_config(args.config)
        if args.endpoint not in config["endpoints"]:
            raise ValueError("Unknown endpoint "+repr(args.endpoint))
        cache = args.cache if args.cache else os.path.join(args.bench, "cache")
        model = evaluate.Endpoint.from_config(config["endpoints"][args.endpoint], cache_dir=cache)

    results = evaluate.run(questions, model, styles, mode=args.mode)
    utils.save(results, args.out)
    print(evaluate.aggregate(results, ["task", "prompt"]).to_string())
    return 0


def _report(args):
    dims = _split(args.dims)
    results = []
    for link in args.results:
        results += utils.load(link)

    table = evaluate.aggregate(results, dims)
    print(table.to_string(na_rep=""))
    if args.csv:
        table.to_csv(args.csv)
    if args.plot:
        evaluate.plot_accuracy(results, dims[0], dims[1] if len(dims) > 1 else None)
        plt.savefig(args.plot, bbox_inches="tight")
        plt.close()
    return 0


def main(argv=None):
    """Run the command line interface.

    Parameters
    ----------
    argv : list, optional
        Arguments, the process arguments by default

    Returns
    -------
    status : integer
        Exit status, 0 on success, 1 on errors and 2 on usage errors
    """
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(name)s - %(message)s")

    commands = {"gen": _gen, "stats": _stats, "verify": _verify, "solve": _solve, "prompt": _prompt, "eval": _eval, "report": _report}
    try:
        return commands[args.command](args)
    except (ValueError, RuntimeError, OSError, configparser.Error) as e:
        sys.stderr.write("error: "+str(e)+"\n")
        return 1
