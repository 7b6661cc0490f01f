"""Rank-parity propagation to intermediate fields from certified twist data."""

from __future__ import annotations

from .genchar import determinant, order2_linear_chars, perm_char, rho_H
from .generators import family_for
from .group import PermGroup
from .lattice import SubgroupRecord, subgroup_lattice
from .membership import membership_solve

BASE = ("base",)

_KIND_RANK = {"base": 0, "quadratic": 1, "dihedral": 2}


class ParityError(RuntimeError):
    """Raised for missing certificates, bad assignments, or table defects."""


def quadratic_symbol(row: int):
    return ("quadratic", row)


def dihedral_symbol(gen_id: str):
    return ("dihedral", gen_id)


def symbol_name(symbol) -> str:
    if symbol[0] == "base":
        return "Base"
    if symbol[0] == "quadratic":
        return "Quad(X%d)" % symbol[1]
    return "Twist(%s)" % symbol[1]


def _symbol_key(symbol):
    return (_KIND_RANK[symbol[0]], symbol[1:])


class ParityExpression:
    """A square-free product of ±1 symbols (exponents live mod 2)."""

    __slots__ = ("symbols",)

    def __init__(self, symbols=()):
        reduced = set()
        for symbol in symbols:
            if symbol in reduced:
                reduced.discard(symbol)
            else:
                reduced.add(symbol)
        self.symbols = frozenset(reduced)

    def support(self):
        return tuple(sorted(self.symbols, key=_symbol_key))

    def symbol_names(self):
        return [symbol_name(s) for s in self.support()]

    def __mul__(self, other: "ParityExpression") -> "ParityExpression":
        if not isinstance(other, ParityExpression):
            return NotImplemented
        out = ParityExpression()
        out.symbols = self.symbols ^ other.symbols
        return out

    def __eq__(self, other):
        return isinstance(other, ParityExpression) and self.symbols == other.symbols

    def __hash__(self):
        return hash(self.symbols)

    def evaluate(self, assignment: "ParityInput") -> int:
        missing = [symbol_name(s) for s in self.support() if assignment.value(s) is None]
        if missing:
            raise ParityError("missing parity assignments: %s" % ", ".join(missing))
        sign = 1
        for symbol in self.symbols:
            sign *= assignment.value(symbol)
        return sign

    def format_text(self) -> str:
        return " * ".join(self.symbol_names()) or "1"

    def __repr__(self):
        return "ParityExpression(%s)" % self.format_text()


def evaluate(expr: ParityExpression, assignment: "ParityInput") -> int:
    """Product of the assigned ±1 values over the expression's symbols."""
    return expr.evaluate(assignment)


def _check_sign(value, where: str) -> int:
    if value not in (1, -1):
        raise ValueError("%s must be +1 or -1, got %r" % (where, value))
    return value


def _quadratic_row(key) -> int:
    text = str(key)
    if text.startswith("X"):
        text = text[1:]
    if not text.isdigit():
        raise ValueError("bad quadratic character id %r (expected e.g. \"X3\")" % key)
    return int(text)


class ParityInput:
    """A (possibly partial) ±1 assignment to parity symbols."""

    __slots__ = ("base", "quadratic", "dihedral")

    def __init__(self, base=None, quadratic=None, dihedral=None):
        self.base = None if base is None else _check_sign(base, "base")
        self.quadratic = {
            _quadratic_row(k): _check_sign(v, "quadratic[%s]" % k)
            for k, v in (quadratic or {}).items()
        }
        self.dihedral = {
            str(k): _check_sign(v, "dihedral[%s]" % k)
            for k, v in (dihedral or {}).items()
        }

    @classmethod
    def from_json(cls, doc: dict) -> "ParityInput":
        if not isinstance(doc, dict):
            raise ValueError("parity input must be a JSON object")
        unknown = set(doc) - {"base", "quadratic", "dihedral"}
        if unknown:
            raise ValueError("unknown parity input keys: %s" % ", ".join(sorted(unknown)))
        return cls(doc.get("base"), doc.get("quadratic"), doc.get("dihedral"))

    def value(self, symbol):
        if symbol[0] == "base":
            return self.base
        if symbol[0] == "quadratic":
            return self.quadratic.get(symbol[1])
        return self.dihedral.get(symbol[1])

    def __repr__(self):
        return "ParityInput(base=%r, quadratic=%r, dihedral=%r)" % (
            self.base,
            self.quadratic,
            self.dihedral,
        )


def full_assignment(G: PermGroup, flavor="thm12", default=1, base=None, quadratic=None, dihedral=None):
    """Total assignment for G's symbols: `default` everywhere, overrides applied."""
    quad = {lc.row: default for lc in order2_linear_chars(G)}
    quad.update({_quadratic_row(k): v for k, v in (quadratic or {}).items()})
    twists = {
        desc.gen_id: default for desc in family_for(G, flavor) if desc.kind == "type2"
    }
    twists.update({str(k): v for k, v in (dihedral or {}).items()})
    return ParityInput(default if base is None else base, quad, twists)


def quadratic_fields(G: PermGroup):
    """Order-2 linear characters of G paired with their index-2 kernels."""
    return tuple((lc, lc.kernel_record()) for lc in order2_linear_chars(G))


def parity_expression(G: PermGroup, record: SubgroupRecord, flavor="thm12", certificate=None) -> ParityExpression:
    """Symbolic parity over the fixed field of `record`, from its certificate."""
    if certificate is None:
        certificate = _certificate_for(G, record, flavor)
    index = G.order() // record.order
    delta = determinant(perm_char(G, record))
    symbols = []
    family = certificate.family
    for i, coeff in certificate.terms:
        desc = family.generators[i]
        if desc.kind == "type2" and coeff % 2:
            symbols.append(dihedral_symbol(desc.gen_id))
    if delta.is_trivial():
        base_exponent = index  # determinant factor contributes one more Base
    else:
        symbols.append(quadratic_symbol(delta.row))
        base_exponent = index - 1
    if base_exponent % 2:
        symbols.append(BASE)
    return ParityExpression(symbols)


def _certificate_for(G: PermGroup, record: SubgroupRecord, flavor: str):
    family = family_for(G, flavor)
    cert = membership_solve(rho_H(G, record), family)
    if cert is None:
        raise ParityError(
            "no certificate for the degree-zero coset character of %s" % record.label
        )
    return cert


class ParityRow:
    """One intermediate field: label, expression, certificate, optional value."""

    __slots__ = ("record", "label", "index", "expression", "certificate", "value")

    def __init__(self, record, label, index, expression, certificate, value):
        self.record = record
        self.label = label
        self.index = index
        self.expression = expression
        self.certificate = certificate
        self.value = value


class ParityTable:
    """Parity expressions (and values, when inputs suffice) for every field row."""

    __slots__ = ("group", "flavor", "rows", "assignment")

    def __init__(self, group, flavor, rows, assignment):
        self.group = group
        self.flavor = flavor
        self.rows = tuple(rows)
        self.assignment = assignment

    def row_for(self, record) -> ParityRow:
        for row in self.rows:
            if row.record.class_id == record.class_id:
                return row
        raise KeyError("no row for subgroup class %s" % record.label)

    def format_text(self) -> str:
        headers = ("field", "index", "expression", "value")
        cells = [headers]
        for row in self.rows:
            value = "" if row.value is None else "%+d" % row.value
            cells.append((row.label, str(row.index), row.expression.format_text(), value))
        widths = [max(len(line[c]) for line in cells) for c in range(4)]
        lines = ["  ".join(line[c].ljust(widths[c]) for c in range(4)).rstrip() for line in cells]
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "flavor": self.flavor,
            "rows": [
                {
                    "field": row.label,
                    "class_id": row.record.class_id,
                    "index": row.index,
                    "expression": row.expression.symbol_names(),
                    "certificate": [[gid, c] for gid, c in row.certificate],
                    "value": row.value,
                }
                for row in self.rows
            ],
        }


def parity_table(G: PermGroup, assignment: ParityInput = None, flavor="thm12") -> ParityTable:
    """One row per subgroup class; rows evaluate when the assignment covers them."""
    family = family_for(G, flavor)
    records = sorted(subgroup_lattice(G).records, key=lambda r: (-r.order, r.class_id))
    rows = []
    for record in records:
        cert = _certificate_for(G, record, flavor)
        expression = parity_expression(G, record, flavor, cert)
        index = G.order() // record.order
        _check_row_shape(G, record, index, expression)
        value = None
        if assignment is not None:
            try:
                value = expression.evaluate(assignment)
            except ParityError:
                value = None
        cert_terms = tuple(
            (family.generators[i].gen_id, c) for i, c in cert.terms
        )
        label = "F(#%d)" % record.class_id
        rows.append(ParityRow(record, label, index, expression, cert_terms, value))
    return ParityTable(G, flavor, rows, assignment)


def _check_row_shape(G, record, index, expression):
    if index == 1 and expression.symbols != frozenset([BASE]):
        raise ParityError("whole-group row must reduce to Base alone")
    if index == 2:
        delta = determinant(perm_char(G, record))
        expected = frozenset([BASE, quadratic_symbol(delta.row)])
        if expression.symbols != expected:
            raise ParityError(
                "index-2 row %s does not echo its quadratic symbol" % record.label
            )


def required_sha_primes(G: PermGroup):
    """Odd primes with a dihedral subquotient, and whether Klein-four forces 2."""
    from .structure import dihedral_subquotients

    primes = set()
    needs2 = False
    for dq in dihedral_subquotients(G):
        if dq.tag.variant == "Dihedral2p":
            primes.add(dq.tag.n)
        elif dq.tag.variant == "KleinFour":
            needs2 = True
    return frozenset(primes), needs2
