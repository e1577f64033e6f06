"""Generated submodules, generated subalgebras and abelianity."""

from typing import List, Optional, Sequence, Tuple

from exactla import SparseEchelon
from chevalley import AlgebraElement, LieAlgebra

from .maps import EmbeddingError, EmbeddingMap


def _closure(
    g: LieAlgebra,
    seeds: Sequence[AlgebraElement],
    operators: Sequence[AlgebraElement],
) -> List[AlgebraElement]:
    echelon = SparseEchelon()
    basis: List[AlgebraElement] = []
    for seed in seeds:
        if seed.is_symbolic():
            raise EmbeddingError("Closures are computed over rational elements")
        if echelon.add(dict(seed.coeffs)):
            basis.append(seed)
    position = 0
    while position < len(basis):
        current = basis[position]
        for op in operators:
            image = g.bracket(op, current)
            if not image.is_zero() and echelon.add(dict(image.coeffs)):
                basis.append(image)
        position += 1
    return basis


def generated_submodule(g: LieAlgebra, seed: AlgebraElement, emb: EmbeddingMap) -> List[AlgebraElement]:
    """Smallest ad(image)-invariant subspace containing seed."""
    return _closure(g, [seed], emb.generator_images())


def submodule_with_words(
    g: LieAlgebra,
    seed: AlgebraElement,
    emb: EmbeddingMap,
) -> List[Tuple[Tuple[int, ...], AlgebraElement]]:
    """Lowering closure of a highest-weight vector, with the words that built it.

    Word (j_k, ..., j_1) means ad φ(Y_{j_k}) ... ad φ(Y_{j_1}) seed.
    """
    echelon = SparseEchelon()
    found: List[Tuple[Tuple[int, ...], AlgebraElement]] = []
    if seed.is_zero():
        return found
    echelon.add(dict(seed.coeffs))
    found.append(((), seed))
    position = 0
    while position < len(found):
        word, current = found[position]
        for j, op in enumerate(emb.y, start=1):
            image = g.bracket(op, current)
            if not image.is_zero() and echelon.add(dict(image.coeffs)):
                found.append(((j,) + word, image))
        position += 1
    return found


def apply_word(g: LieAlgebra, emb: EmbeddingMap, word: Sequence[int], a: AlgebraElement) -> AlgebraElement:
    for j in reversed(word):
        a = g.bracket(emb.y[j - 1], a)
    return a


def generated_subalgebra(g: LieAlgebra, seeds: Sequence[AlgebraElement]) -> List[AlgebraElement]:
    """Smallest bracket-closed subspace containing the seeds."""
    echelon = SparseEchelon()
    basis: List[AlgebraElement] = []
    for seed in seeds:
        if echelon.add(dict(seed.coeffs)):
            basis.append(seed)
    position = 0
    while position < len(basis):
        current = basis[position]
        for other in basis[:position + 1]:
            image = g.bracket(other, current)
            if not image.is_zero() and echelon.add(dict(image.coeffs)):
                basis.append(image)
        position += 1
    return basis


def first_nonzero_bracket(
    g: LieAlgebra,
    basis: Sequence[AlgebraElement],
) -> Optional[Tuple[int, int, AlgebraElement]]:
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            value = g.bracket(basis[i], basis[j])
            if not value.is_zero():
                return i, j, value
    return None


def image_span(emb: EmbeddingMap) -> List[AlgebraElement]:
    """Basis of the image subalgebra plus the radical subspace."""
    g = emb.target
    seeds = emb.generator_images()
    if emb.radical_image is not None:
        seeds = seeds + generated_submodule(g, emb.radical_image, emb)
    return generated_subalgebra(g, seeds)


def span_contains_element(basis: Sequence[AlgebraElement], a: AlgebraElement) -> bool:
    echelon = SparseEchelon()
    for b in basis:
        echelon.add(dict(b.coeffs))
    return echelon.contains(dict(a.coeffs))
