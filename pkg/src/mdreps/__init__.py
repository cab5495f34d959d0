"""Exact computational toolkit for the rank-2 local representations of the
involutive quotient of the loop braid groups: classified generator pairs,
relation verification, the semidirect-product group model, the little-groups
induction machine, charge-conservation-with-glue, and non-semisimple
decomposition analysis."""

from .scalar import (Cyc, NonVanishing, Poly, RF, RejectedPoint,
                     BranchAmbiguity, param, rf, zeta)
from .matrix import (ExactMatrix, RepPair, commutant_basis, eigen_data,
                     embed_at, kron, nullspace, words)
from .presentations import (BRAID, LOOP_BRAID, MIXED_DOUBLES, SYM,
                            VIRTUAL_BRAID, RelationSet, anomaly, passes,
                            verify)
from .catalog import (apply_transform, analysis_pair, check_ds_equivalence,
                      make_involutive_braid, make_manji, make_md_pair,
                      Transform, w_conjugation_check)
from .mdd import GroupElement, babeda_from_md, babeda_to_md, evaluate_in_rep
from .clifford import (Character, classify_small_dims, induce,
                       irreps_of_subgroup, is_irreducible,
                       orbit_and_stabilizer)
from .structure import (algebra_dims, commutant, decompose, find_idempotents,
                        semisimple_quotient_dims, x_trichotomy)
from .ccwg import (check_closure, compositions, f_over, glue_nilpotency,
                   is_ccwg, less, orbit_rep, project_K, project_glue,
                   split_lemma_check)
