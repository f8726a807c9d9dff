"""Walk through the left-to-right sorting scan on a permutation in S5."""

# %%
from coxsort import SortingWord, enumerate_sorted, format_word, preset, sort_element
from coxsort.permutations import parse_permutation, permutation_element, word_permutation

A4 = preset("A4")
omega = SortingWord(A4, (1, 2, 3, 4, 3, 2, 1, 2, 3, 2))
sigma = parse_permutation("41532")
u = permutation_element(A4, sigma)
print("omega  =", format_word(omega.letters))
print("sigma  =", "".join(map(str, sigma)), "length", u.length)

# %% Step through the scan by hand: test each letter for a left descent of the residual.
x = u
chosen = []
for i, s in enumerate(omega.letters, start=1):
    descent = A4.is_left_descent(x, s)
    if descent:
        chosen.append(i)
        x = A4.left_multiply(s, x)
    perm = word_permutation(A4.reduced_word(x), 5)
    print(f"{i:2d}  s{s}  {''.join(map(str, perm))}  {'yes' if descent else 'no ':3s}  {chosen}")

# %% The library call gives the same index set.
alpha = sort_element(omega, u)
print("sorted:", alpha)
assert list(alpha.indices) == chosen

# %% omega is a reduced word for the longest element, so every permutation is a subword.
family = enumerate_sorted(omega)
print("sorted subwords of omega:", len(family))
