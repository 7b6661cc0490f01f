"""Certified decompositions of degree-zero coset characters and parity propagation."""

from .catalog import (
    CatalogEntry,
    CatalogError,
    bundled_catalog_path,
    load_bundled_catalog,
    load_catalog,
)
from .chartab import CharacterTable, character_table
from .cyclotomic import Cyclo
from .decompose import (
    DecomposeError,
    TreeNode,
    decompose_structural,
    flatten_to_certificate,
    tree_to_json,
)
from .genchar import (
    GenChar,
    LinearChar,
    determinant,
    has_trivial_determinant,
    induce,
    inflate,
    irreducible_char,
    order2_linear_chars,
    perm_char,
    restrict,
    rho_H,
    trivial_char,
)
from .generators import (
    COROLLARY_FLAVOR,
    THEOREM_FLAVOR,
    GeneratorDesc,
    GeneratorError,
    GeneratorFamily,
    cor29_family,
    family_for,
    theorem_family,
)
from .group import PermGroup
from .groupspec import GroupSpecError, group_from_cycles, parse_group_spec
from .lattice import SubgroupLattice, SubgroupRecord, subgroup_lattice
from .membership import (
    MembershipCertificate,
    MembershipError,
    certificate_from_json,
    certificate_to_json,
    is_s_element,
    membership_solve,
    perm_lattice_solve,
    random_S_element,
    solomon_coefficients,
    verify_certificate,
)
from .parity import (
    ParityError,
    ParityExpression,
    ParityInput,
    ParityTable,
    dihedral_symbol,
    evaluate,
    full_assignment,
    parity_expression,
    parity_table,
    quadratic_fields,
    quadratic_symbol,
    required_sha_primes,
)
from .perm import Perm
from .spanreport import SpanReport, span_report
from .structure import dihedral_subquotients, identify_small_type, is_hyperelementary

__version__ = "0.1.0"

__all__ = [
    "COROLLARY_FLAVOR",
    "CatalogEntry",
    "CatalogError",
    "CharacterTable",
    "Cyclo",
    "DecomposeError",
    "GenChar",
    "GeneratorDesc",
    "GeneratorError",
    "GeneratorFamily",
    "GroupSpecError",
    "LinearChar",
    "MembershipCertificate",
    "MembershipError",
    "ParityError",
    "ParityExpression",
    "ParityInput",
    "ParityTable",
    "Perm",
    "PermGroup",
    "SpanReport",
    "SubgroupLattice",
    "SubgroupRecord",
    "THEOREM_FLAVOR",
    "TreeNode",
    "bundled_catalog_path",
    "certificate_from_json",
    "certificate_to_json",
    "character_table",
    "cor29_family",
    "decompose_structural",
    "determinant",
    "dihedral_subquotients",
    "dihedral_symbol",
    "evaluate",
    "family_for",
    "flatten_to_certificate",
    "full_assignment",
    "group_from_cycles",
    "has_trivial_determinant",
    "identify_small_type",
    "induce",
    "inflate",
    "irreducible_char",
    "is_hyperelementary",
    "is_s_element",
    "load_bundled_catalog",
    "load_catalog",
    "membership_solve",
    "order2_linear_chars",
    "parity_expression",
    "parity_table",
    "parse_group_spec",
    "perm_char",
    "perm_lattice_solve",
    "quadratic_fields",
    "quadratic_symbol",
    "random_S_element",
    "required_sha_primes",
    "restrict",
    "rho_H",
    "solomon_coefficients",
    "span_report",
    "subgroup_lattice",
    "theorem_family",
    "tree_to_json",
    "trivial_char",
    "verify_certificate",
]
