"""Walk the wedge pipeline end to end on the classic degree-1 example.

A pencil of planes and the standard contact structure intersect in a
foliation by curves whose singular scheme is a pair of skew lines; the
one-dimensional Rao module certifies that its conormal sheaf splits.
"""

from folcurves import (
    curve_invariants,
    hilbert_polynomial,
    is_decomposable,
    is_projective,
    legendrian_foliation,
    minimal_free_resolution,
    pencil_form,
    rao_module_dimensions,
    singular_ideal,
    split_criterion,
    standard_contact_form,
    wedge,
)

w_pencil = pencil_form()
w_contact = standard_contact_form()
print("pencil form:   ", w_pencil)
print("contact form:  ", w_contact)

omega = wedge(w_pencil, w_contact)
print("\nwedge (a decomposable projective 2-form):")
print("   ", omega)
print("projective:", is_projective(omega), "| decomposable:", is_decomposable(omega))

ideal = singular_ideal(omega)
print("\nsingular ideal generators:")
for g in ideal.generators:
    print("   ", g)

print("\nHilbert polynomial:", hilbert_polynomial(ideal))
degree, genus = curve_invariants(ideal)
print(f"singular curve: degree {degree}, arithmetic genus {genus} (two skew lines)")

resolution = minimal_free_resolution(ideal)
print("\nBetti table:", resolution.betti())

profile = rao_module_dimensions(ideal)
print("Rao profile:", profile.to_json())
print("conormal verdict from the Rao dimension:", split_criterion(profile.total))

presentation = legendrian_foliation(w_contact, w_pencil)
print("\nas a contact sub-foliation: degree", presentation.degree,
      "with conormal twists", presentation.conormal_twists)
