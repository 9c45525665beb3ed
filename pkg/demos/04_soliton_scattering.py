"""Soliton labels and the factorized scattering rule.

Each separated soliton carries an affine label z^{-phase}(reversed word)
over the reduced alphabet.  Two-body scattering swaps labels through the
R-matrix with phase shifts +-delta, delta = 2*(shorter length) + H, and
any bracketing of the pairwise swaps predicts the same outcome.
"""

from boxball.dynamics import State
from boxball.rmatrix import format_affine
from boxball.solitons import (
    bump_tableau,
    detect,
    format_tableau,
    label,
    predict_m_body,
    predict_two_body,
    run_scattering,
)

n = 4
p = State.from_text("332...11...2..............", n)

print("incoming solitons and their labels:")
for s in detect(p, 0):
    print(f"  length {s.length} at {s.position}: {format_affine(label(s))}")
print()

labels = tuple(label(s) for s in detect(p, 0))
print("pairwise prediction, longest against the rest first:")
a, b = predict_two_body(labels[0], labels[1])
print(f"  {format_affine(labels[0])} x {format_affine(labels[1])} -> {format_affine(a)} x {format_affine(b)}")
c, d = predict_two_body(b, labels[2])
print(f"  {format_affine(b)} x {format_affine(labels[2])} -> {format_affine(c)} x {format_affine(d)}")
e, f = predict_two_body(a, c)
print(f"  {format_affine(a)} x {format_affine(c)} -> {format_affine(e)} x {format_affine(f)}")
print(f"  outgoing, left to right: {format_affine(e)} {format_affine(f)} {format_affine(d)}")
print(f"  other bracketing agrees: {predict_m_body(labels, order=(1, 0, 1)) == predict_m_body(labels)}")
print()

report = run_scattering(p)
print(f"simulation reaches the reordered state after {report.steps} steps:")
print(f"  {report.final_state.to_text()}")
print(f"  simulated: {' '.join(format_affine(x) for x in report.out_labels_simulated)}")
print(f"  predicted: {' '.join(format_affine(x) for x in report.out_labels_predicted)}")
print(f"  {'MATCH' if report.match else 'MISMATCH'}")
print()

print("the row-bumping tableau never changes along the way:")
print(format_tableau(bump_tableau(p)))
print("  =")
print(format_tableau(report.tableau_out))
