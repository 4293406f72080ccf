"""Biquandles, G-families and partially multiplicative biquandles, and the
coloring invariants they define on Y-oriented spatial trivalent graph diagrams."""

from .biquandle import (AxiomReport, FiniteBiquandle, FiniteGroup, check_biquandle_axioms,
                        check_group_axioms, cyclic_group, direct_product, make_alexander,
                        make_conjugation, make_constant_action, parse_biquandle, parse_group,
                        s_map, s_map_inverse, serialize_biquandle, serialize_group,
                        symmetric_group, trivial_biquandle)
from .diagram import (Crossing, Diagram, Vertex, builtin_diagram, parse_diagram,
                      serialize_diagram, validate_diagram)
from .errors import (DomainProductMismatch, HbkError, IterationCapExceeded, MalformedTable,
                     NonUnitParameter, NotABijection, ParseError, StructureDiagramMismatch,
                     UnknownFixture, ValidationError)
from .gfamily import (GFamily, associated_gfamily, check_gfamily_axioms, parse_gfamily,
                      serialize_gfamily)
from .invariants import (InvariantPolynomial, colorings, counting_invariant,
                         enhanced_invariant, enumerate_g_colorings, format_polynomial,
                         g_coloring_fibers)
from .parallel import idem_index, parallel_biquandle, parallel_op, type_index
from .pmb import (PartialMultBiquandle, check_pmb_axioms, decode_pair, encode_pair,
                  factorizations, is_group_decomposable, parse_pmb, pmb_from_gfamily,
                  serialize_pmb)

__version__ = "0.1.0"
