import random

from vkgroups.braids import BraidLetter, BraidWord, LetterKind
from vkgroups.lattice import IntMatrix
from vkgroups.words import Word


def random_word(alphabet, length, *, rng=random):
    syllables = []
    for _ in range(length):
        gen = rng.choice(alphabet.gens)
        syllables.append((gen, rng.choice([-2, -1, 1, 2])))
    return Word(alphabet, tuple(syllables))


def random_braid(strands, length, *, rng=random):
    letters = []
    for _ in range(length):
        index = rng.randint(1, strands - 1)
        if rng.random() < 0.5:
            letters.append(BraidLetter(LetterKind.SIGMA, index, rng.choice([-1, 1])))
        else:
            letters.append(BraidLetter(LetterKind.RHO, index, 1))
    return BraidWord(strands, tuple(letters))


def random_matrix(max_size=6, bound=100, *, rng=random):
    m, n = rng.randint(1, max_size), rng.randint(1, max_size)
    return IntMatrix.from_rows(
        [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(m)], n,
    )


def random_square_matrix(max_size=6, bound=100, *, rng=random):
    n = rng.randint(1, max_size)
    return IntMatrix.from_rows(
        [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)], n,
    )
