"""Quivers with admissible relations and their finite-dimensional quotients.

An `AlgebraPresentation` carries a quiver, a set of relations, and a
computed linear basis of the quotient of the path algebra by the ideal
generated by the relations.  The basis is found by spanning paths
length by length and reducing modulo the linear span of all padded
relation multiples that fit below the current length; the first length
contributing nothing to the quotient is the nilpotency bound.  This is a
linear-span reduction, not a Groebner computation: it is exact for
length-homogeneous relation ideals (every instance shipped here), and a
growth cap turns anything the reduction cannot tame into a loud error.

Paths store their arrows in application order: ``Path(v, (a, b))`` starts
at vertex ``v``, applies arrow ``a`` first, then ``b``.  The textual
relation format uses the opposite (right-to-left) composition order, as
is usual for written compositions; the parser reverses it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import AlgebraBuildError, InputError
from .linalg import QQ

DEFAULT_BASIS_CAP = 64
_RAW_PATH_CAP = 20000


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    def vertex_index(self, label: str) -> int:
        try:
            return self.vertices.index(label)
        except ValueError:
            raise InputError("unknown vertex %r" % label) from None

    def arrow_index(self, name: str) -> int:
        for k, a in enumerate(self.arrows):
            if a.name == name:
                return k
        raise InputError("unknown arrow %r" % name)

    def opposite(self) -> "Quiver":
        return Quiver(
            self.vertices,
            tuple(Arrow(a.name, a.target, a.source) for a in self.arrows),
        )


def make_quiver(vertex_labels, arrow_triples) -> Quiver:
    """Build and validate a quiver from labels and (name, src, dst) triples."""
    labels = tuple(str(v) for v in vertex_labels)
    if len(set(labels)) != len(labels):
        raise InputError("duplicate vertex label")
    index = {v: i for i, v in enumerate(labels)}
    arrows = []
    seen = set()
    for name, src, dst in arrow_triples:
        if name in seen:
            raise InputError("duplicate arrow name %r" % name)
        seen.add(name)
        if src not in index:
            raise InputError("unknown vertex %r in arrow %r" % (src, name))
        if dst not in index:
            raise InputError("unknown vertex %r in arrow %r" % (dst, name))
        arrows.append(Arrow(name, index[src], index[dst]))
    return Quiver(labels, tuple(arrows))


@dataclass(frozen=True)
class Path:
    """A path in a quiver; ``arrows`` are arrow indices in application order."""

    source: int
    arrows: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.arrows)


def path_target(q: Quiver, p: Path) -> int:
    return q.arrows[p.arrows[-1]].target if p.arrows else p.source


def path_sort_key(p: Path):
    return (len(p.arrows), p.arrows, p.source)


def render_path(q: Quiver, p: Path) -> str:
    if not p.arrows:
        return "e_%s" % q.vertices[p.source]
    return ".".join(q.arrows[k].name for k in reversed(p.arrows))


Term = tuple[int, Path]
Relation = tuple[Term, ...]


@dataclass(frozen=True)
class RelationSet:
    relations: tuple[Relation, ...]


def _validate_relations(q: Quiver, rels: RelationSet) -> None:
    for rel in rels.relations:
        if not rel:
            raise InputError("empty relation")
        sig = None
        for coeff, p in rel:
            if coeff == 0:
                raise InputError("zero coefficient in relation")
            if len(p.arrows) < 2:
                raise InputError(
                    "non-admissible relation: monomial of length %d" % len(p.arrows)
                )
            at = p.source
            for k in p.arrows:
                a = q.arrows[k]
                if a.source != at:
                    raise InputError(
                        "non-composable path through arrow %r" % a.name
                    )
                at = a.target
            this_sig = (p.source, at)
            if sig is None:
                sig = this_sig
            elif sig != this_sig:
                raise InputError(
                    "relation not homogeneous in (source, target)"
                )


class AlgebraPresentation:
    """A quiver algebra with relations and its computed path basis.

    Immutable after construction; the ``_memo`` dict only caches derived
    data (the opposite presentation, canonical modules, the form matrix)
    and every write is idempotent.
    """

    def __init__(self, quiver: Quiver, relations: RelationSet, basis_cap: int):
        self.quiver = quiver
        self.relations = relations
        self.basis_cap = basis_cap
        self._memo: dict = {}
        self._build()

    # -- construction ---------------------------------------------------

    def _build(self) -> None:
        q = self.quiver
        _validate_relations(q, self.relations)
        out_arrows: dict[int, list[int]] = {i: [] for i in range(q.n)}
        for k, a in enumerate(q.arrows):
            out_arrows[a.source].append(k)

        paths_by_len: list[list[Path]] = [[Path(i, ()) for i in range(q.n)]]
        dims_history = [q.n]
        max_rel_len = max(
            (max(len(p.arrows) for _, p in rel) for rel in self.relations.relations),
            default=0,
        )

        length = 0
        while True:
            length += 1
            new_paths = []
            for p in paths_by_len[length - 1]:
                for k in out_arrows[path_target(q, p)]:
                    new_paths.append(Path(p.source, p.arrows + (k,)))
            paths_by_len.append(new_paths)
            if sum(len(ps) for ps in paths_by_len) > _RAW_PATH_CAP:
                raise AlgebraBuildError(
                    "path enumeration exceeded %d raw paths; "
                    "algebra not finite-dimensional at this cap" % _RAW_PATH_CAP
                )
            dim = self._quotient_dim(paths_by_len, length)
            if dim > self.basis_cap:
                raise AlgebraBuildError(
                    "quotient dimension exceeded cap %d; "
                    "algebra not finite-dimensional at this cap" % self.basis_cap
                )
            # a length contributing nothing ends the climb, but only once
            # every relation has fully entered the ideal span
            if dim == dims_history[-1] and length >= max_rel_len:
                self.nilpotency_bound = length
                break
            dims_history.append(dim)

        self._finalize(paths_by_len)

    def _blocks(self, paths_by_len, length):
        """Group all paths of length <= length by (source, target) block."""
        q = self.quiver
        blocks: dict[tuple[int, int], list[Path]] = {}
        for ps in paths_by_len[: length + 1]:
            for p in ps:
                blocks.setdefault((p.source, path_target(q, p)), []).append(p)
        for key in blocks:
            blocks[key].sort(key=path_sort_key)
        return blocks

    def _ideal_rows(self, paths_by_len, length):
        """Vectors spanning the relation ideal inside paths of length <= length.

        Every padded multiple u.r.v whose monomials all fit is included:
        pad lengths run over len(u) + len(v) <= length - max monomial of r.
        """
        q = self.quiver
        rows: dict[tuple[int, int], list[dict[Path, int]]] = {}
        paths_into: dict[int, list[Path]] = {}
        paths_from: dict[int, list[Path]] = {}
        for ps in paths_by_len[: length + 1]:
            for p in ps:
                paths_from.setdefault(p.source, []).append(p)
                paths_into.setdefault(path_target(q, p), []).append(p)
        for rel in self.relations.relations:
            longest = max(len(p.arrows) for _, p in rel)
            src = rel[0][1].source
            tgt = path_target(q, rel[0][1])
            budget = length - longest
            if budget < 0:
                continue
            for v in paths_into.get(src, []):
                if len(v.arrows) > budget:
                    continue
                for u in paths_from.get(tgt, []):
                    if len(v.arrows) + len(u.arrows) > budget:
                        continue
                    vec: dict[Path, int] = {}
                    for coeff, p in rel:
                        whole = Path(v.source, v.arrows + p.arrows + u.arrows)
                        vec[whole] = vec.get(whole, 0) + coeff
                    vec = {k: c for k, c in vec.items() if c != 0}
                    if vec:
                        key = (v.source, path_target(q, u) if u.arrows else tgt)
                        rows.setdefault(key, []).append(vec)
        return rows

    def _quotient_dim(self, paths_by_len, length) -> int:
        blocks = self._blocks(paths_by_len, length)
        ideal = self._ideal_rows(paths_by_len, length)
        dim = 0
        for key, paths in blocks.items():
            rows = [
                [vec.get(p, 0) for p in paths] for vec in ideal.get(key, [])
            ]
            _, pivots = linalg.row_reduce(QQ, rows, len(paths))
            dim += len(paths) - len(pivots)
        return dim

    def _finalize(self, paths_by_len) -> None:
        q = self.quiver
        length = self.nilpotency_bound
        blocks = self._blocks(paths_by_len, length)
        ideal = self._ideal_rows(paths_by_len, length)

        basis: list[Path] = []
        reduce_table: dict[Path, dict[Path, Fraction | int]] = {}
        for key in sorted(blocks):
            paths = blocks[key]
            rows = [[vec.get(p, 0) for p in paths] for vec in ideal.get(key, [])]
            red, pivots = linalg.row_reduce(QQ, rows, len(paths))
            pivot_set = set(pivots)
            free = [j for j in range(len(paths)) if j not in pivot_set]
            basis.extend(paths[j] for j in free)
            # reduction: eliminate pivot coordinates with the RREF rows;
            # what is left is supported on the basis (free) columns
            for j, p in enumerate(paths):
                v = [0] * len(paths)
                v[j] = 1
                for k, c in enumerate(pivots):
                    f = v[c]
                    if f != 0:
                        v = [QQ.normalize(x - f * y) for x, y in zip(v, red[k])]
                reduce_table[p] = {
                    paths[jj]: v[jj] for jj in free if v[jj] != 0
                }

        basis.sort(key=path_sort_key)
        if any(len(p.arrows) >= length for p in basis):
            raise AlgebraBuildError("basis path at or above the nilpotency bound")
        self.basis = tuple(basis)
        self.basis_index = {p: i for i, p in enumerate(basis)}
        self._reduce_table = reduce_table
        by_pair: dict[tuple[int, int], list[int]] = {}
        for i, p in enumerate(basis):
            by_pair.setdefault((p.source, path_target(q, p)), []).append(i)
        self.basis_by_pair = {k: tuple(v) for k, v in by_pair.items()}
        self._check_relations_vanish()

    def _check_relations_vanish(self) -> None:
        for rel in self.relations.relations:
            acc: dict[Path, Fraction | int] = {}
            for coeff, p in rel:
                for b, c in self.reduce_path(p).items():
                    acc[b] = QQ.normalize(acc.get(b, 0) + coeff * c)
            if any(c != 0 for c in acc.values()):
                raise AlgebraBuildError("relation does not vanish in the basis")

    # -- queries ---------------------------------------------------------

    def dim(self) -> int:
        return len(self.basis)

    def reduce_path(self, p: Path) -> dict[Path, Fraction | int]:
        """Express the class of a path in the chosen basis."""
        hit = self._reduce_table.get(p)
        if hit is not None:
            return hit
        if len(p.arrows) <= self.nilpotency_bound:
            # a composable path of in-range length that was never
            # enumerated cannot exist
            raise InputError("path not composable in this quiver")
        head = Path(p.source, p.arrows[:-1])
        last = p.arrows[-1]
        acc: dict[Path, Fraction | int] = {}
        for b, c in self.reduce_path(head).items():
            ext = Path(b.source, b.arrows + (last,))
            for b2, c2 in self.reduce_path(ext).items():
                acc[b2] = QQ.normalize(acc.get(b2, 0) + c * c2)
        return {b: c for b, c in acc.items() if c != 0}

    def basis_paths_from(self, i: int) -> dict[int, tuple[Path, ...]]:
        """Basis paths starting at vertex i, grouped by target vertex."""
        out: dict[int, tuple[Path, ...]] = {}
        for (s, t), positions in sorted(self.basis_by_pair.items()):
            if s == i:
                out[t] = tuple(self.basis[k] for k in positions)
        return out

    def opposite(self) -> "AlgebraPresentation":
        """The opposite presentation; an involution on instances."""
        if "op" not in self._memo:
            op_q = self.quiver.opposite()
            op_rels = RelationSet(
                tuple(
                    tuple(
                        (coeff, Path(path_target(self.quiver, p), tuple(reversed(p.arrows))))
                        for coeff, p in rel
                    )
                    for rel in self.relations.relations
                )
            )
            op = AlgebraPresentation(op_q, op_rels, self.basis_cap)
            op._memo["op"] = self
            self._memo["op"] = op
        return self._memo["op"]

    def __repr__(self) -> str:
        return "AlgebraPresentation(%d vertices, %d arrows, dim %d)" % (
            self.quiver.n,
            len(self.quiver.arrows),
            self.dim(),
        )


def build_algebra(
    quiver: Quiver, relations: RelationSet, basis_cap: int = DEFAULT_BASIS_CAP
) -> AlgebraPresentation:
    return AlgebraPresentation(quiver, relations, basis_cap)


def same_algebra(a: AlgebraPresentation, b: AlgebraPresentation) -> bool:
    return a is b or (a.quiver == b.quiver and a.relations == b.relations)


# -- text format -----------------------------------------------------------


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_relation_expr(q: Quiver, expr: str) -> Relation:
    """Parse ``±c*name_k.….name_1 ± …`` (rightmost arrow applied first)."""
    terms: list[Term] = []
    buf = expr.replace(" ", "")
    if not buf:
        raise InputError("empty relation expression")
    chunks: list[str] = []
    cur = ""
    for ch in buf:
        if ch in "+-" and cur not in ("", "+", "-"):
            chunks.append(cur)
            cur = ch
        else:
            cur += ch
    chunks.append(cur)
    for chunk in chunks:
        sign = 1
        if chunk.startswith("+"):
            chunk = chunk[1:]
        elif chunk.startswith("-"):
            sign, chunk = -1, chunk[1:]
        coeff = 1
        if "*" in chunk:
            head, chunk = chunk.split("*", 1)
            if not head.isdigit():
                raise InputError("bad relation coefficient %r" % head)
            coeff = int(head)
        names = chunk.split(".")
        if any(not n for n in names):
            raise InputError("bad path %r in relation" % chunk)
        arrow_ids = [q.arrow_index(n) for n in reversed(names)]
        source = q.arrows[arrow_ids[0]].source
        terms.append((sign * coeff, Path(source, tuple(arrow_ids))))
    return tuple(terms)


def load_algebra(text: str, basis_cap: int = DEFAULT_BASIS_CAP) -> AlgebraPresentation:
    """Load the line-oriented algebra format.

    ``[quiver]`` section: one ``vertices:`` line and ``arrow: name src dst``
    lines; ``[relations]`` section (optional): ``rel: <expr>`` lines.
    """
    section = None
    vertices: list[str] | None = None
    arrow_triples: list[tuple[str, str, str]] = []
    rel_exprs: list[str] = []
    for lineno, line in _content_lines(text):
        if line.startswith("["):
            if line == "[quiver]":
                section = "quiver"
            elif line == "[relations]":
                section = "relations"
            else:
                raise InputError("line %d: unknown section %s" % (lineno, line))
            continue
        if section == "quiver":
            if line.startswith("vertices:"):
                if vertices is not None:
                    raise InputError("line %d: repeated vertices line" % lineno)
                vertices = line[len("vertices:") :].split()
                if not vertices:
                    raise InputError("line %d: no vertices listed" % lineno)
            elif line.startswith("arrow:"):
                parts = line[len("arrow:") :].split()
                if len(parts) != 3:
                    raise InputError("line %d: arrow needs name src dst" % lineno)
                arrow_triples.append((parts[0], parts[1], parts[2]))
            else:
                raise InputError("line %d: unexpected line in [quiver]" % lineno)
        elif section == "relations":
            if line.startswith("rel:"):
                rel_exprs.append(line[len("rel:") :])
            else:
                raise InputError("line %d: unexpected line in [relations]" % lineno)
        else:
            raise InputError("line %d: content before any section" % lineno)
    if vertices is None:
        raise InputError("missing vertices line")
    q = make_quiver(vertices, arrow_triples)
    rels = RelationSet(tuple(parse_relation_expr(q, e) for e in rel_exprs))
    return build_algebra(q, rels, basis_cap)


def load_algebra_file(path, basis_cap: int = DEFAULT_BASIS_CAP) -> AlgebraPresentation:
    with open(path, "r", encoding="utf-8") as fh:
        return load_algebra(fh.read(), basis_cap)
