"""Combinatorics and exact modular representations of symmetric groups.

Partitions, abacus displays, Rouquier blocks, ladder regularization,
Littlewood-Richardson inductions, Specht and signed permutation modules over
GF(p), and a MeatAxe for deciding irreducibility.
"""

from .abacus import (
    AbacusDisplay,
    BlockId,
    RouquierDecomposition,
    block_members,
    block_of,
    from_core_quotient,
    from_partition,
    is_rouquier,
    p_core,
    p_quotient,
    p_weight,
    rouquier_decompose,
    to_partition,
)
from .classify import (
    IrredVerdict,
    SignedYoungLabel,
    VerificationReport,
    classify_rouquier_block,
    irreducible_specht,
    signed_young_label,
    verify_main_theorem,
)
from .errors import InconclusiveError, PartitionError, PreconditionError, SignedYoungError
from .ladders import ladder_gt, ladder_numbers, regularize
from .lr import FiltrationMultiset, column_pieri, lr_coefficient, pipeline_filtration, vertical_hook_inductions
from .meataxe import hom_basis, is_isomorphic, is_isomorphic_irred, is_summand_irred, meataxe, meataxe_irreducible
from .partitions import (
    Partition,
    conjugate,
    dominates,
    is_p_regular,
    is_p_restricted,
    mullineux,
    p_adic_split,
)
from .specht import (
    GroupRep,
    SignedPermRep,
    dual_rep,
    gram_matrix,
    perm_module,
    signed_perm_rep,
    specht_module,
    specht_rep,
    tensor_sign,
)

__version__ = "0.1.0"
