"""Finitely presented graded associative algebras with exact normal forms.

The engine is generic degreewise linear algebra: degree-1 relations
eliminate generators down to a chosen letter basis, and for d >= 2 the
degree-d quotient is (letters (x) V_{d-1}) modulo the rows obtained by
right-multiplying every degree-2 relation by a degree-(d-2) basis word
and rewriting through the already-computed reduction maps.  This is
complete for homogeneous ideals because every two-sided ideal element
u.r.v lies in letters.I_{d-1} once u is nonempty.
"""

from .rationals import qq, parse_rational
from .rings import RATIONALS
from .series import Series
from .words import Alphabet


class PresentationError(ValueError):
    pass


def echelon(rows, field):
    """Insertion echelon over an abstract field; returns pivot -> monic row.

    Coordinates are compared by their natural (tuple) order; the pivot set
    is the leading-coordinate set of the row space, hence canonical.
    """
    pivots = {}
    for row in rows:
        row = dict(row)
        while row:
            lead = min(row)
            if lead not in pivots:
                break
            c = row.pop(lead)
            for k, v in pivots[lead].items():
                if k == lead:
                    continue
                s = field.sub(row.get(k, field.zero), field.mul(c, v))
                if field.is_zero(s):
                    row.pop(k, None)
                else:
                    row[k] = s
        if row:
            lead = min(row)
            c = field.inv(row[lead])
            pivots[lead] = {k: field.mul(c, v) for k, v in row.items()}
    return pivots


def solve_pivots(pivots, field):
    """Fully back-substitute so each pivot row mentions no other pivot coord."""
    for lead in sorted(pivots, reverse=True):
        row = pivots[lead]
        for k in sorted(row):
            if k == lead or k not in pivots:
                continue
            c = row.pop(k)
            # pivots[k] has k > lead, so it is already fully solved
            for k2, v in pivots[k].items():
                if k2 == k:
                    continue
                s = field.sub(row.get(k2, field.zero), field.mul(c, v))
                if field.is_zero(s):
                    row.pop(k2, None)
                else:
                    row[k2] = s
    return pivots


class Presentation:
    """A graded algebra given by degree-1 generators and relations of degree <= 2."""

    def __init__(self, names, relations, field=RATIONALS, name=""):
        self.name = name
        self.generator_names = tuple(names)
        self.field = field
        self.full_alphabet = Alphabet(self.generator_names)
        lin, quad = [], []
        for r in relations:
            degs = {len(w) for w in r}
            if len(degs) != 1:
                raise PresentationError("relations must be homogeneous")
            d = degs.pop()
            if d == 1:
                lin.append(r)
            elif d == 2:
                quad.append(r)
            else:
                raise PresentationError("only degree 1 and 2 relations supported")
        self._eliminate_linear(lin)
        self._rewrite_quadratic(quad)
        self.basis = {0: [()], 1: [(i,) for i in range(len(self.letters))]}
        self.reduction = {}
        self._nf_cache = {(): {(): self.field.one}}

    # -- construction ---------------------------------------------------

    def _eliminate_linear(self, lin):
        field = self.field
        rows = [{(g,): field.embed(c) for (g,), c in r.items()} for r in lin]
        pivots = solve_pivots(echelon(rows, field), field)
        self.letters = [
            i for i in range(len(self.generator_names)) if (i,) not in pivots
        ]
        self.alphabet = Alphabet(tuple(self.generator_names[i] for i in self.letters))
        pos = {g: j for j, g in enumerate(self.letters)}
        self.generator_images = []
        for g in range(len(self.generator_names)):
            if (g,) in pivots:
                img = {
                    pos[k[0]]: field.neg(c)
                    for k, c in pivots[(g,)].items()
                    if k != (g,)
                }
            else:
                img = {pos[g]: field.one}
            self.generator_images.append(img)

    def _rewrite_quadratic(self, quad):
        field = self.field
        self.quadratic = []
        for r in quad:
            row = {}
            for (a, b), c in r.items():
                c = field.embed(c)
                for i, ca in self.generator_images[a].items():
                    for j, cb in self.generator_images[b].items():
                        s = field.add(
                            row.get((i, j), field.zero), field.mul(c, field.mul(ca, cb))
                        )
                        if field.is_zero(s):
                            row.pop((i, j), None)
                        else:
                            row[(i, j)] = s
            if row:
                self.quadratic.append(row)

    def extend_to(self, dmax):
        for d in range(max(self.basis) + 1, dmax + 1):
            self._build_degree(d)

    def _build_degree(self, d):
        field = self.field
        letters = range(len(self.letters))
        prev = self.basis[d - 1]
        rows = []
        for r in self.quadratic:
            for v in self.basis[d - 2]:
                row = {}
                for (a, b), c in r.items():
                    for u, c2 in self._reduce_letter(d - 1, b, v).items():
                        w = (a,) + u
                        s = field.add(row.get(w, field.zero), field.mul(c, c2))
                        if field.is_zero(s):
                            row.pop(w, None)
                        else:
                            row[w] = s
                if row:
                    rows.append(row)
        pivots = solve_pivots(echelon(rows, field), field)
        red = {}
        basis = []
        for i in letters:
            for w in prev:
                word = (i,) + w
                if word in pivots:
                    red[word] = {
                        k: field.neg(c) for k, c in pivots[word].items() if k != word
                    }
                else:
                    basis.append(word)
                    red[word] = {word: field.one}
        basis.sort()
        self.basis[d] = basis
        self.reduction[d] = red

    def _reduce_letter(self, d, letter, word):
        """Expansion of letter.word (word a basis word of degree d-1) in B_d."""
        if d == 1:
            return {(letter,): self.field.one}
        return self.reduction[d][(letter,) + word]

    # -- queries ----------------------------------------------------------

    def dimension(self, d):
        self.extend_to(d)
        return len(self.basis[d])

    def normal_form_word(self, word):
        """Normal form of a word over the letter basis, as word -> coeff."""
        try:
            return self._nf_cache[word]
        except KeyError:
            pass
        field = self.field
        d = len(word)
        self.extend_to(d)
        out = {}
        for u, c in self.normal_form_word(word[1:]).items():
            for v, c2 in self._reduce_letter(d, word[0], u).items():
                s = field.add(out.get(v, field.zero), field.mul(c, c2))
                if field.is_zero(s):
                    out.pop(v, None)
                else:
                    out[v] = s
        self._nf_cache[word] = out
        return out

    def normal_form(self, s):
        """Normal form of a Series over the full generator alphabet."""
        if s.alphabet == self.alphabet:
            expand = None
        elif s.alphabet == self.full_alphabet:
            expand = self.generator_images
        else:
            raise PresentationError("series alphabet does not match presentation")
        field = self.field
        out = {}
        for w, c in s.terms.items():
            c = field.embed(c) if s.ring is not self.field else c
            if expand is None:
                pieces = {w: c}
            else:
                pieces = {(): c}
                for g in w:
                    nxt = {}
                    for u, cu in pieces.items():
                        for j, cj in expand[g].items():
                            v = u + (j,)
                            s2 = field.add(nxt.get(v, field.zero), field.mul(cu, cj))
                            if field.is_zero(s2):
                                nxt.pop(v, None)
                            else:
                                nxt[v] = s2
                    pieces = nxt
            for u, cu in pieces.items():
                for v, cv in self.normal_form_word(u).items():
                    s2 = field.add(out.get(v, field.zero), field.mul(cu, cv))
                    if field.is_zero(s2):
                        out.pop(v, None)
                    else:
                        out[v] = s2
        return Series(self.alphabet, s.trunc, self.field, out, _clean=True)

    # -- loading ------------------------------------------------------

    @classmethod
    def builtin(cls, name, field=RATIONALS):
        import os

        path = os.path.join(os.path.dirname(__file__), "data", name + ".presentation")
        return cls.load(path, field=field, name=name)

    @classmethod
    def load(cls, path, field=RATIONALS, name=""):
        with open(path) as fh:
            text = fh.read()
        return cls.parse(text, field=field, name=name)

    @classmethod
    def parse(cls, text, field=RATIONALS, name=""):
        names = None
        relations = []
        for ln in text.splitlines():
            ln = ln.strip()
            if not ln or ln.startswith("#"):
                continue
            if ln.startswith("generators:"):
                names = tuple(ln.split(":", 1)[1].split())
            elif ln.startswith("relation:"):
                if names is None:
                    raise PresentationError("generators line must come first")
                relations.append(_parse_relation(ln.split(":", 1)[1], names))
            else:
                raise PresentationError("unrecognized line: %r" % ln)
        if names is None:
            raise PresentationError("missing generators line")
        return cls(names, relations, field=field, name=name)


def _parse_relation(text, names):
    index = {n: i for i, n in enumerate(names)}
    out = {}
    sign = qq(1)
    for tok in text.split():
        if tok == "+":
            sign = qq(1)
            continue
        if tok == "-":
            sign = qq(-1)
            continue
        if "*" in tok:
            ctext, wtext = tok.split("*", 1)
            coeff = sign * parse_rational(ctext)
        else:
            coeff = sign
            wtext = tok
        word = tuple(index[n] for n in wtext.split("."))
        out[word] = out.get(word, qq(0)) + coeff
        sign = qq(1)
    return {w: c for w, c in out.items() if c != 0}
