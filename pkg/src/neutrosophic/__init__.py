"""Multi-valued representations of neutrosophic (T, I, F) information."""

__version__ = "0.1.0"

from .bifuzzy import bifuzzy3, bifuzzy4_def, bifuzzy4_ign, bifuzzy5, fuzzy3, ifs4
from .core import (
    BifuzzyPair,
    ConstraintViolation,
    NeutrosophicTriple,
    OutOfRange,
    PartitionVector,
    TripleArray,
    check_partition,
    make_pair,
    make_triple,
    make_triples,
    swap_tf,
)
from .measures import (
    DEFAULT_PROFILE,
    Profile,
    ScalarReport,
    compare,
    crisp_distances,
    definedness,
    entropy_czekanowski,
    entropy_ruzicka,
    mean_component,
    net_truth,
    parse_profile,
    scalar_report,
    score,
)
from .norms import GODEL, LUKASIEWICZ, PRODUCT, InvalidParameter, TNormFamily, frank, parse_family, tconorm, tnorm
from .penta_def import PentaDefVector, decompose5d, indeterminacy5d, intersect5d, negate5d, union5d
from .penta_sat import PentaSatVector, decompose5s, indeterminacy5s, intersect5s, negate5s, union5s
from .tetra import TetraVector, decompose4, indeterminacy4, intersect4, negate4, union4
