################################################################################
# Prompt Module                                                                #
#                                                                              #
"""Rendering of questions into zero-shot, few-shot, chain-of-thought and
mistake-hint prompts."""
################################################################################


import configparser

import causgen.utils as utils
import causgen.scm as scm_mod
import causgen.question as question_mod

from causgen.graph import TieredDag
from causgen.scm import Scm


STYLES = ["zero-shot", "icl-1", "icl-2", "cot-0", "cot-1", "cot-2", "mistake-hint"]


def parse_prompt_style(style):
    """Split a prompt style into its kind and number of examples.

    Parameters
    ----------
    style : string
        Prompt style out of :data:`STYLES`

    Returns
    -------
    style : tuple
        Kind **zero-shot**, **icl**, **cot** or **mistake-hint** and number
        of examples
    """
    if style not in STYLES:
        raise ValueError("Unknown prompt style "+repr(style)+", expected one of "+", ".join(STYLES))
    kind, sep, num = style.rpartition("-")
    if kind in ["icl", "cot"]:
        return kind, int(num)
    return style, 0


class Exemplar:
    """This class holds a worked example of a task.

    Parameters
    ----------
    question : Question
        Example question built from a hand-specified scenario
    answer : string
        Answer block lines without the ``ANSWER:`` marker
    reasoning : string
        Step-by-step solution
    """
    def __init__(self, question, answer, reasoning):
        self._question = question
        self._answer = answer
        self._reasoning = reasoning


    ##################
    # Getter Methods #
    ##################
    def get_question(self):
        """Return the example question."""
        return self._question

    def get_answer(self):
        """Return the answer lines."""
        return self._answer

    def get_reasoning(self):
        """Return the step-by-step solution."""
        return self._reasoning

    def get_names(self):
        """Return the node names used in the example."""
        return self._question.get_names()


class ExemplarBank:
    """This class loads the worked examples of all tasks and checks each
    authored answer against the computed ground truth.

    Parameters
    ----------
    link : string, optional
        Link to exemplar file, the bundled examples are used by default
    """
    def __init__(self, link=""):
        # Avoid circular import at module level
        import causgen.evaluate as evaluate

        parser = configparser.ConfigParser(interpolation=None)
        with open(link if link else utils.data_link("exemplars.cfg"), "r", encoding="utf-8") as file_in:
            parser.read_file(file_in)

        self._exemplars = {task: [] for task in question_mod.TASKS}
        for section in parser.sections():
            task, sep, num = section.partition(".")
            if task not in self._exemplars or not num.isdigit():
                raise ValueError("Invalid exemplar section "+repr(section))
            exemplar = _build_exemplar(task, parser[section])

            # Verify authored answer
            parsed = evaluate.extract_answer("ANSWER:\n"+exemplar.get_answer(), task)
            if evaluate.score(parsed, exemplar.get_question()) != "correct":
                raise ValueError("Exemplar "+section+" has a wrong answer")

            self._exemplars[task].append((int(num), exemplar))

        for task in self._exemplars:
            self._exemplars[task] = [exemplar for num, exemplar in sorted(self._exemplars[task], key=lambda x: x[0])]

    def get_exemplars(self, task):
        """Return the worked examples of a task.

        Parameters
        ----------
        task : string
            Task kind

        Returns
        -------
        exemplars : list
            Exemplars in ascending order
        """
        return list(self._exemplars[task])


def _build_exemplar(task, section):
    names = [x.strip() for x in section["names"].split(",")]
    ids = {name: v for v, name in enumerate(names)}
    edges = [[int(v) for v in edge.split(">")] for edge in section["edges"].split(",")]
    graph = TieredDag([int(x) for x in section["shape"].split("-")], edges)

    def states(text):
        pairs = [line.rpartition(":") for line in text.strip().splitlines()]
        return {ids[name.strip()]: state.strip() == "happens" for name, sep, state in pairs}

    if task == "CP":
        question = question_mod.build_cp_question(graph, names, float(section["ce_d"]))
    elif task == "BA":
        question = question_mod.build_ba_question(graph, names, float(section["ce_d"]))
    else:
        functions = {}
        for line in section["functions"].strip().splitlines():
            name, sep, expr = line.partition(":")
            functions[ids[name.strip()]] = scm_mod.parse_expr(expr, names)
        scm = Scm(graph, functions)
        observed = states(section["observed"])
        if task == "FI":
            question = question_mod.build_fi_question(scm, names, 0, observed=observed)
        else:
            whatif = [ids[x.strip()] for x in section["whatif"].split(",")]
            question = question_mod.build_ci_question(scm, names, len(whatif), 0, observed=observed, whatif=whatif)

    reasoning = "\n".join(line.strip() for line in section["reasoning"].strip().splitlines())
    answer = "\n".join(line.strip() for line in section["answer"].strip().splitlines())
    return Exemplar(question, answer, reasoning)


def question_body(question):
    """Return the question text without the answer format instruction.

    Parameters
    ----------
    question : Question
        Benchmark question

    Returns
    -------
    body : string
        Question text
    """
    text = question.get_text()
    instruction = question_mod.answer_format(question.get_task())
    if text.endswith(instruction):
        text = text[:-len(instruction)]
    return text.rstrip()


def render_prompt(question, style, bank):
    """Render a question into a prompt.

    * **zero-shot** - question and answer format
    * **icl-k** - k worked examples with their answers before the question
    * **cot-0** - question followed by a step-by-step instruction
    * **cot-k** - k worked examples with their step-by-step solution and
      the step-by-step instruction
    * **mistake-hint** - task specific list of common mistakes before the
      question

    Every prompt ends with the answer format instruction.

    Parameters
    ----------
    question : Question
        Benchmark question
    style : string
        Prompt style out of :data:`STYLES`
    bank : ExemplarBank
        Worked examples

    Returns
    -------
    prompt : string
        Rendered prompt
    """
    kind, num = parse_prompt_style(style)
    task = question.get_task()
    templates = question_mod.load_templates()

    exemplars = bank.get_exemplars(task)
    if len(exemplars) < num:
        raise ValueError("Exemplar bank has "+str(len(exemplars))+" examples for task "+task+", style "+style+" needs "+str(num))
    exemplars = exemplars[:num]

    # Name uniqueness
    target = {name.lower() for name in question.get_names()}
    for exemplar in exemplars:
        shared = target & {name.lower() for name in exemplar.get_names()}
        if shared:
            raise ValueError("Example names "+str(sorted(shared))+" collide with question "+question.get_id())

    parts = []
    if kind == "mistake-hint":
        parts.append(templates["hint"]+"\n"+templates[task+".hint"])

    for i, exemplar in enumerate(exemplars):
        block = templates["example"].replace("{N}", str(i+1))+"\n"+question_body(exemplar.get_question())+"\n\n"
        if kind == "cot":
            block += exemplar.get_reasoning()+"\n\n"
        block += "ANSWER:\n"+exemplar.get_answer()
        parts.append(block)

    if exemplars:
        parts.append(templates["target"])

    parts.append(question_body(question))
    if kind == "cot":
        parts.append(templates["cot"])
    parts.append(question_mod.answer_format(task))

    return "\n\n".join(parts)
