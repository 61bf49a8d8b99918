"""Closed neighborhood ideals of squared paths: formulas, recursion, exact engines."""

try:
    from . import _neighborly as _impl  # installed package layout
except ImportError:  # in-tree runs put the built extension on sys.path directly
    import _neighborly as _impl

__all__ = [
    "CapExceeded",
    "ParseError",
    "SquarefreeIdeal",
    "add_ideals",
    "alexander_dual",
    "betti",
    "betti_koszul",
    "bight_formula",
    "check_names",
    "colon_by",
    "complementary_ideal",
    "dominating_sets",
    "fh_formula",
    "fh_vectors",
    "find_linear_quotients_order",
    "find_shelling",
    "has_free_vertex_property",
    "height_formula",
    "invariants",
    "is_cohen_macaulay",
    "is_sequentially_cm",
    "is_shelling_order",
    "mapping_cone_recursion",
    "minimal_primes",
    "ni_pn2",
    "path_ideal",
    "pdpath_formula",
    "pdreg_formula",
    "shelling_order",
    "verify",
]

for _name in __all__:
    globals()[_name] = getattr(_impl, _name)
del _name

__version__ = "1.0.0"
