"""quandlekit: finite quandles via permutation group envelopes.

Core objects: Permutation and PermGroup (deterministic stabilizer chains),
Quandle (validated multiplication tables), Envelope (transitive group with a
central stabilizer translation), and the enumeration pipeline that builds all
connected quandles a catalog of groups supports, filtered up to isomorphism.
"""

from .perm import Permutation, compose, inverse, identity, parse_cycles
from .group import PermGroup, BlockSystem, make_group
from .quandle import (
    Quandle,
    from_table,
    right_translation,
    inner_group,
    displacement_group,
    is_connected,
    is_faithful,
    is_latin,
    is_simple,
    is_primitive_quandle,
    is_quasiprimitive_quandle,
    congruence_closure,
    are_isomorphic,
)
from .construct import (
    Envelope,
    quandle_from_envelope,
    envelope_of,
    conj_quandle,
    coset_quandle,
    affine_quandle,
    is_irreducible,
    transport,
)
from .enumerate import (
    central_class_generators,
    enumerate_degree,
    filter_up_to_iso,
    classify_affine,
    check_inner_conditions,
)
from .catalog import (
    parse_catalog,
    write_catalog,
    load_catalog,
    parse_quandle_file,
    write_quandle_file,
)

__version__ = "0.1.0"
