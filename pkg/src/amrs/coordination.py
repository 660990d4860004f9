"""Near-duplicate density via TF-IDF cosine similarity.

The coordination score for a ticker-day is the fraction of post pairs whose
TF-IDF cosine similarity exceeds a threshold. Vectors use unigrams + bigrams,
raw term counts weighted by ln(N/df), and L2 normalization. The vocabulary is
capped at the most document-frequent terms with lexicographic tie-breaking so
the whole computation is deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .text import bigrams, tokenize
from .types import PostRecord


@dataclass(frozen=True, slots=True)
class CoordinationParams:
    similarity_threshold: float = 0.8
    max_posts_sampled: int = 200
    vocab_cap: int = 1000

    def __post_init__(self) -> None:
        if not 0.0 < self.similarity_threshold <= 1.0:
            raise ValueError("similarity_threshold must be in (0, 1]")
        if self.max_posts_sampled < 2:
            raise ValueError("max_posts_sampled must be >= 2")


def _terms(text: str) -> list[str]:
    tokens = tokenize(text)
    return tokens + bigrams(tokens)


def tfidf_vectors(texts: Sequence[str],
                  params: CoordinationParams = CoordinationParams()) -> list[dict[int, float]]:
    """Sparse L2-normalized TF-IDF vectors, one per text.

    A text with no in-vocabulary terms maps to the empty (zero) vector.
    """
    if not texts:
        raise ValueError("texts must be non-empty")
    term_lists = [_terms(t) for t in texts]

    doc_freq: dict[str, int] = {}
    for terms in term_lists:
        for term in set(terms):
            doc_freq[term] = doc_freq.get(term, 0) + 1

    # Top vocab_cap terms by document frequency, ties broken lexicographically.
    ranked = sorted(doc_freq.items(), key=lambda item: (-item[1], item[0]))
    ranked = ranked[: params.vocab_cap]
    vocab = {term: idx for idx, (term, _) in enumerate(ranked)}
    n_docs = len(texts)
    # +1 keeps corpus-universal terms (df == N) scoreable: a day of identical
    # posts must come out maximally similar, not as all-zero vectors.
    idf = [math.log(n_docs / df) + 1.0 for _, df in ranked]

    vectors: list[dict[int, float]] = []
    for terms in term_lists:
        counts: dict[int, int] = {}
        for term in terms:
            idx = vocab.get(term)
            if idx is not None:
                counts[idx] = counts.get(idx, 0) + 1
        vec = {idx: count * idf[idx] for idx, count in counts.items()}
        norm = math.sqrt(sum(w * w for w in vec.values()))
        if norm > 0:
            vec = {idx: w / norm for idx, w in vec.items()}
        else:
            vec = {}
        vectors.append(vec)
    return vectors


def sparse_cosine(a: dict[int, float], b: dict[int, float]) -> float:
    """Dot product of unit vectors; zero vectors give 0."""
    if len(b) < len(a):
        a, b = b, a
    return sum(w * b.get(idx, 0.0) for idx, w in a.items())


def coordination_score(posts: Sequence[PostRecord],
                       params: CoordinationParams = CoordinationParams()) -> float:
    """Fraction of sampled post pairs with cosine similarity above the threshold.

    Fewer than two posts give 0. For days larger than max_posts_sampled the
    most recent posts by timestamp are scored (ties broken by post_id) and the
    sample fraction is used directly.
    """
    if len(posts) < 2:
        return 0.0
    sample = list(posts)
    if len(sample) > params.max_posts_sampled:
        sample.sort(key=lambda p: (p.timestamp, p.post_id))
        sample = sample[-params.max_posts_sampled:]
    vectors = tfidf_vectors([p.text for p in sample], params)
    n = len(vectors)
    hits = 0
    for i in range(n):
        vi = vectors[i]
        for j in range(i + 1, n):
            if sparse_cosine(vi, vectors[j]) > params.similarity_threshold:
                hits += 1
    return 2.0 * hits / (n * (n - 1))
