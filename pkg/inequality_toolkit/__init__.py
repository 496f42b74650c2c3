import inequality_toolkit.version
from inequality_toolkit.seqcore import *
from inequality_toolkit.classical import *
from inequality_toolkit.reports import RatioReport, TracePoint, WitnessTrace
from inequality_toolkit.ratios import *
from inequality_toolkit.series import *
from inequality_toolkit.extremal import (SearchConfig, SearchResult,
    param_to_seq, compass_search, search, sharpness_report,
    holder_growth_trend)
from inequality_toolkit.utilities import (HypothesisError,
    QuotientNotMonotone, DegenerateDenominator, NonPositiveInnerSum,
    get_parameters, configure)
# get version number
__version__ = inequality_toolkit.version.version
