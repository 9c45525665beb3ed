"""Walk through the crystal structure on single rows and tensor products.

Elements of B_l are weakly increasing words over {1..n}; e_i and f_i
move letters one step, with color 0 wrapping around the alphabet.
"""

from boxball import crystal, tensor

n = 4
b = (1, 1, 3, 3, 4)
print(f"alphabet size n = {n}, element b = {crystal.format_element(b, n)}")
print()

print("raising and lowering:")
for i in range(n):
    eb = crystal.apply_e(b, i, n)
    fb = crystal.apply_f(b, i, n)
    show = lambda x: crystal.format_element(x, n) if x else "0"
    print(f"  e_{i} b = {show(eb):8}  f_{i} b = {show(fb):8}  "
          f"eps_{i} = {crystal.epsilon(b, i, n)}  phi_{i} = {crystal.phi(b, i, n)}")
print()

print("all of B_2 for n = 3, in enumeration order:")
print(" ", " ".join(crystal.format_element(x, 3) for x in crystal.elements(2, 3)))
print()

t = tensor.parse_tensor("1223|112|24", n)
print(f"tensor element t = {tensor.format_tensor(t, n)}")
sig = tensor.signature(t, 1, n)
red = tensor.reduce_signature(sig)
print(f"  1-signature: {sig}  (origins {sig.origins})")
print(f"  reduced:     {red}  (origins {red.origins})")
e1 = tensor.tensor_e(t, 1, n)
f1 = tensor.tensor_f(t, 1, n)
print(f"  e_1 t = {tensor.format_tensor(e1, n)}")
print(f"  f_1 t = {tensor.format_tensor(f1, n)}")
