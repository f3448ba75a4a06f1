"""Changemaker lattices, correction terms and genus bounds for L-space surgeries."""

from .alexander import (AlexanderPoly, cable_genus, cable_lspace_criterion, genus, torsion,
                        torsion_profile, torus_poly, validate_lspace_form)
from .cables import CableStage, complement_chain, family, linking_matrix, verify_stage
from .changemaker import (Changemaker, bound_nonsharp, bound_sharp, enumerate_changemakers,
                          is_changemaker, make_change, sharp_genus, subset_sums_complete)
from .dinvariants import (CovectorCheckReport, d_lspace_surgery, d_unknot, d_unknot_oracle,
                          lemma_c_check, max_genus_from_sign_vectors, spinc_label)
from .lattice import (LinearLattice, complement_basis, gram, hj_evaluate, hj_expand,
                      inner_product, is_characteristic, is_isometric_to_linear,
                      vectors_of_norm)
from .realization import (RealizationWitness, ScanRecord, berge_bound, cabling_sum_data,
                          flip_orientation, goda_teragaito_max, realize, scan)

__version__ = "0.1.0"
