"""Connected graded algebras given by homogeneous presentations.

Words are tuples of generator indices.  Words of one degree are ordered
deglex with the declared generator order; the ideal slice in each degree is
row reduced with the deglex-largest word as pivot, so the basis (normal)
words are the words that are never a leading word.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .exactfield import QQ, FieldSpec, format_coeff, inv
from .linalg import Echelon, vaddto

DEFAULT_WORDS_CAP = 2**20


class CapExceeded(RuntimeError):
    """A configured computation cap was hit."""


class NonHomogeneousRelation(ValueError):
    pass


class TruncationError(ValueError):
    """A degree beyond the table's truncation was requested."""


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int = 1


class NcPolynomial:
    """Noncommutative polynomial: {word: coefficient}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, word, c=1):
        return cls({tuple(word): c})

    def __add__(self, other):
        out = dict(self.terms)
        vaddto(out, other.terms)
        return NcPolynomial(out)

    def __sub__(self, other):
        out = dict(self.terms)
        vaddto(out, other.terms, -1)
        return NcPolynomial(out)

    def __neg__(self):
        return NcPolynomial({w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NcPolynomial):
            out = {}
            for u, a in self.terms.items():
                for v, b in other.terms.items():
                    vaddto(out, {u + v: a * b})
            return NcPolynomial(out)
        return NcPolynomial({w: c * other for w, c in self.terms.items()})

    def __rmul__(self, c):
        return NcPolynomial({w: c * a for w, a in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, NcPolynomial) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def degrees(self, gen_degrees) -> set:
        return {sum(gen_degrees[i] for i in w) for w in self.terms}

    def format(self, names) -> str:
        return format_terms(sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]), reverse=True), names)

    def __repr__(self):
        return f"NcPolynomial({self.terms!r})"


def format_word(word, names) -> str:
    if not word:
        return "1"
    out = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        n = names[word[i]]
        out.append(n if j - i == 1 else f"{n}^{j - i}")
        i = j
    return "".join(out)


def format_terms(items, names) -> str:
    if not items:
        return "0"
    parts = []
    for w, c in items:
        ws = format_word(w, names)
        if c == 1:
            s = ws
        elif c == -1:
            s = "-" + ws
        else:
            s = f"{format_coeff(c)}*{ws}" if w else format_coeff(c)
        parts.append(s)
    return " + ".join(parts).replace("+ -", "- ")


@dataclass
class AlgebraPresentation:
    generators: list
    relations: list
    field: FieldSpec = QQ
    metadata: dict = dc_field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be distinct")
        for g in self.generators:
            if not isinstance(g.degree, int) or g.degree < 1:
                raise ValueError(f"generator {g.name} must have positive integer degree")
        degs = self.gen_degrees
        for i, r in enumerate(self.relations):
            for w in r.terms:
                for letter in w:
                    if not 0 <= letter < len(degs):
                        raise ValueError(f"relation {i} uses unknown generator index {letter}")
            ds = r.degrees(degs)
            if len(ds) > 1:
                raise NonHomogeneousRelation(f"relation {i} not homogeneous")
            if 0 in ds:
                raise NonHomogeneousRelation(f"relation {i} has a constant term")

    @property
    def gen_degrees(self):
        return [g.degree for g in self.generators]

    @property
    def names(self):
        return [g.name for g in self.generators]

    def word_degree(self, word) -> int:
        degs = self.gen_degrees
        return sum(degs[i] for i in word)

    def relation_degree(self, i) -> int:
        return next(iter(self.relations[i].degrees(self.gen_degrees)))

    def generated_in_degree_one(self) -> bool:
        return all(g.degree == 1 for g in self.generators)

    def parse_word(self, letters) -> tuple:
        index = {g.name: i for i, g in enumerate(self.generators)}
        try:
            return tuple(index[a] for a in letters)
        except KeyError as exc:
            raise ValueError(f"unknown generator {exc.args[0]!r}") from None

    def poly(self, spec) -> NcPolynomial:
        """Build a polynomial from [(coeff, "word" or [letters]), ...]; single-letter names only for strings."""
        terms = {}
        for c, w in spec:
            letters = list(w) if isinstance(w, str) else w
            vaddto(terms, {self.parse_word(letters): self.field.coerce(c)})
        return NcPolynomial(terms)


def words_of_degree(gen_degrees, d, cap=DEFAULT_WORDS_CAP):
    """All words of weighted degree d, in deglex (lexicographic) order."""
    table = {0: [()]}
    for e in range(1, d + 1):
        out = []
        for g, gd in enumerate(gen_degrees):
            if gd <= e:
                out.extend((g,) + w for w in table[e - gd])
        if len(out) > cap:
            raise CapExceeded(f"{len(out)} words in degree {e} exceeds cap {cap}")
        out.sort()
        table[e] = out
    return table[d]


class GradedBasisTable:
    """The algebra A = k<X>/I truncated at degree N."""

    def __init__(self, presentation: AlgebraPresentation, max_degree: int, words_cap: int = DEFAULT_WORDS_CAP):
        if max_degree < 0:
            raise ValueError("max_degree must be >= 0")
        self.presentation = presentation
        self.field = presentation.field
        self.max_degree = max_degree
        self.words_cap = words_cap
        degs = presentation.gen_degrees
        self.gen_degrees = degs
        self.words = []
        self.word_index = []
        self.ideal = []
        self.basis = []
        self.basis_index = []
        self._nf_cache = []
        self._mul_cache = {}
        rel_by_deg = {}
        for r in presentation.relations:
            rel_by_deg.setdefault(next(iter(r.degrees(degs))), []).append(r)
        table = {0: [()]}
        for d in range(max_degree + 1):
            if d > 0:
                out = []
                for g, gd in enumerate(degs):
                    if gd <= d:
                        out.extend((g,) + w for w in table[d - gd])
                if len(out) > words_cap:
                    raise CapExceeded(f"{len(out)} words in degree {d} exceeds cap {words_cap}")
                out.sort()
                table[d] = out
            words = table[d]
            index = {w: i for i, w in enumerate(words)}
            self.words.append(words)
            self.word_index.append(index)
            ech = Echelon()
            for r in rel_by_deg.get(d, []):
                ech.add({index[w]: c for w, c in r.terms.items()})
            for g, gd in enumerate(degs):
                if gd > d:
                    continue
                low_words = self.words[d - gd]
                for row in self.ideal[d - gd].rows.values():
                    ech.add({index[(g,) + low_words[k]]: c for k, c in row.items()})
                    ech.add({index[low_words[k] + (g,)]: c for k, c in row.items()})
            self.ideal.append(ech)
            basis = [w for i, w in enumerate(words) if i not in ech.rows]
            self.basis.append(basis)
            self.basis_index.append({w: i for i, w in enumerate(basis)})
            self._nf_cache.append({})

    # ------------------------------------------------------------------
    def dims(self) -> list:
        return [len(b) for b in self.basis]

    def dim(self, d: int) -> int:
        if d < 0:
            return 0
        self._check(d)
        return len(self.basis[d])

    def _check(self, d):
        if d > self.max_degree:
            raise TruncationError(f"degree {d} exceeds truncation N={self.max_degree}")

    def word_degree(self, word) -> int:
        degs = self.gen_degrees
        return sum(degs[i] for i in word)

    def nf_word(self, word) -> dict:
        """Coordinates of a word in the basis of its degree."""
        word = tuple(word)
        d = self.word_degree(word)
        self._check(d)
        cache = self._nf_cache[d]
        got = cache.get(word)
        if got is not None:
            return got
        bi = self.basis_index[d].get(word)
        if bi is not None:
            out = {bi: self.field.one()}
        else:
            idx = self.word_index[d][word]
            rem = self.ideal[d].reduce({idx: self.field.one()})
            words = self.words[d]
            bidx = self.basis_index[d]
            out = {bidx[words[k]]: c for k, c in rem.items()}
        cache[word] = out
        return out

    def normal_form(self, poly: NcPolynomial) -> dict:
        """{degree: coordinate vector}; zero degrees are omitted."""
        out = {}
        for w, c in poly.terms.items():
            d = self.word_degree(w)
            vaddto(out.setdefault(d, {}), self.nf_word(w), c)
        return {d: v for d, v in out.items() if v}

    def mul_basis(self, d1: int, i: int, d2: int, j: int) -> dict:
        key = (d1, i, d2, j)
        got = self._mul_cache.get(key)
        if got is None:
            got = self.nf_word(self.basis[d1][i] + self.basis[d2][j])
            self._mul_cache[key] = got
        return got

    def multiply(self, a: dict, da: int, b: dict, db: int) -> dict:
        """Product of homogeneous elements given by coordinate vectors."""
        self._check(da + db)
        out = {}
        for i, x in a.items():
            for j, y in b.items():
                vaddto(out, self.mul_basis(da, i, db, j), x * y)
        return out

    def unit_vector(self, word) -> dict:
        return self.nf_word(word)

    def to_poly(self, v: dict, d: int) -> NcPolynomial:
        return NcPolynomial({self.basis[d][i]: c for i, c in v.items()})

    def format(self, v: dict, d: int) -> str:
        items = sorted(((self.basis[d][i], c) for i, c in v.items()), reverse=True)
        return format_terms(items, self.presentation.names)

    def format_word(self, word) -> str:
        return format_word(word, self.presentation.names)


def build_basis(p: AlgebraPresentation, N: int, words_cap: int = DEFAULT_WORDS_CAP) -> GradedBasisTable:
    return GradedBasisTable(p, N, words_cap)


def normal_form(e: NcPolynomial, t: GradedBasisTable) -> dict:
    return t.normal_form(e)


def multiply(a: dict, da: int, b: dict, db: int, t: GradedBasisTable) -> dict:
    return t.multiply(a, da, b, db)


# ---------------------------------------------------------------------------
# presentation transforms


def _substitute(poly: NcPolynomial, images: dict) -> NcPolynomial:
    """Replace generator g by images[g] (an NcPolynomial) wherever present."""
    out = {}
    for w, c in poly.terms.items():
        acc = NcPolynomial({(): c})
        for letter in w:
            acc = acc * images.get(letter, NcPolynomial.monomial((letter,)))
        vaddto(out, acc.terms)
    return NcPolynomial(out)


def minimize_presentation(p: AlgebraPresentation) -> AlgebraPresentation:
    """Eliminate generators that some relation expresses through the others."""
    gens = list(p.generators)
    rels = [NcPolynomial(r.terms) for r in p.relations]
    while True:
        hit = None
        for ri, r in enumerate(rels):
            for w, c in sorted(r.terms.items()):
                if len(w) == 1:
                    hit = (ri, w[0], c)
                    break
            if hit:
                break
        if hit is None:
            break
        ri, g, c = hit
        r = rels.pop(ri)
        image = NcPolynomial({w: -a * inv(c) for w, a in r.terms.items() if w != (g,)})
        rels = [_substitute(q, {g: image}) for q in rels]
        keep = [i for i in range(len(gens)) if i != g]
        remap = {old: new for new, old in enumerate(keep)}
        rels = [NcPolynomial({tuple(remap[x] for x in w): a for w, a in q.terms.items()}) for q in rels]
        rels = [q for q in rels if q]
        gens = [gens[i] for i in keep]
    return AlgebraPresentation(gens, rels, p.field, dict(p.metadata), p.name)


def phi_N(p: AlgebraPresentation, N: int, reference_dims: list, check_degree: int | None = None):
    """Free algebra on a minimal generating set modulo the relations of degree <= N.

    Returns (presentation, flags) where flags[d] says whether dim Phi_N(A)_d
    equals reference_dims[d] for d <= check_degree.
    """
    if check_degree is None:
        check_degree = len(reference_dims) - 1
    if check_degree > len(reference_dims) - 1:
        raise ValueError(f"check degree {check_degree} exceeds available dims (up to {len(reference_dims) - 1})")
    q = minimize_presentation(p)
    degs = q.gen_degrees
    rels = [r for r in q.relations if next(iter(r.degrees(degs))) <= N]
    phi = AlgebraPresentation(list(q.generators), rels, q.field, dict(q.metadata), f"Phi_{N}({p.name})")
    dims = build_basis(phi, check_degree).dims()
    flags = [dims[d] == reference_dims[d] for d in range(check_degree + 1)]
    return phi, flags


def quotient_truncation(p: AlgebraPresentation, d: int) -> AlgebraPresentation:
    """A/A_{>=d}: adds the words of degree >= d whose proper prefixes have degree < d."""
    if d < 1:
        raise ValueError("truncation degree must be >= 1")
    degs = p.gen_degrees
    extra = []
    top = d + max(degs) - 1
    for e in range(d, top + 1):
        for w in words_of_degree(degs, e):
            if e - degs[w[-1]] < d:
                extra.append(NcPolynomial.monomial(w, p.field.one()))
    meta = {k: v for k, v in p.metadata.items() if k not in ("as_regular", "gldim", "domain", "koszul", "noetherian")}
    meta["finite_dimensional"] = True
    return AlgebraPresentation(list(p.generators), list(p.relations) + extra, p.field, meta, f"{p.name}/A>={d}")


def relation_ideal_closure_defects(t: GradedBasisTable, pairs):
    """Padded relations u*r*v (from ``pairs`` of (relation index, u, v)) that fail to reduce to zero."""
    bad = []
    for ri, u, v in pairs:
        r = t.presentation.relations[ri]
        padded = NcPolynomial({tuple(u) + w + tuple(v): c for w, c in r.terms.items()})
        if t.normal_form(padded):
            bad.append((ri, u, v))
    return bad
