import causgen.utils as utils
import causgen.graph as graph
import causgen.scm as scm
import causgen.oracle as oracle
import causgen.naming as naming
import causgen.question as question
import causgen.prompt as prompt
import causgen.store as store
import causgen.evaluate as evaluate
import causgen.cli as cli
from .graph import TieredDag
from .scm import Scm
from .naming import Lexicon
from .question import Question
from .prompt import ExemplarBank
from .evaluate import Endpoint, MockModel

__all__ = [
    "TieredDag", "Scm", "Lexicon", "Question", "ExemplarBank",
    "Endpoint", "MockModel",
    "utils",
    "graph", "scm", "oracle", "naming", "question", "prompt", "store", "evaluate", "cli"
]
