from .evaluation import EvalConfig
from .evaluation import EvalResult
from .evaluation import InadmissibleError
from .evaluation import ValueKind
from .evaluation import ZetaKind
from .report import CheckRecord
from .report import Report
from .report import Status
from .word import Composition
from .word import ProductKind
from .word import Word
from .word import WordPoly
from .word import repeat

__all__ = [
    "Composition",
    "Word",
    "WordPoly",
    "ProductKind",
    "repeat",
    "EvalConfig",
    "EvalResult",
    "InadmissibleError",
    "ValueKind",
    "ZetaKind",
    "CheckRecord",
    "Report",
    "Status",
]
