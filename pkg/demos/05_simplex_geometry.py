"""Information geometry of the probability simplex.

The macroscopic potential Phi_q(p) = H_{2-q}(p)/(2-q) has Hessian
diag(-p_i^(-q)); restricting its negative to the simplex tangent space
gives a Riemannian metric. At q = 0 the metric is flat with constant
volume element sqrt(3); as q grows the volume element blows up near the
boundary, concentrating geometry where probabilities are small. Writes
the sampled field to simplex_field.csv next to this script.
"""

import math
from pathlib import Path

import numpy as np

from qspectra import (
    field_to_csv,
    grid_field,
    induced_metric,
    potential,
    potential_hessian,
    volume_element,
)


def main() -> None:
    p = (0.2, 0.3, 0.5)
    print(f"= potential at p = {p} =")
    for q in (0.0, 1.0, 1.4, 2.0):
        print(f"  Phi_{q:<3}(p) = {potential(p, q):.12f}")

    print("\n= Hessian and induced metric at q = 1.4 =")
    print("  Hessian diagonal:", np.diag(potential_hessian(p, 1.4)))
    g = induced_metric(p, 1.4)
    print("  induced 2x2 metric:")
    for row in g:
        print(f"    [{row[0]:12.6f} {row[1]:12.6f}]")
    print(f"  sqrt(det g) = {volume_element(p, 1.4):.12f}")

    print("\n= volume element across the simplex, q = 1.4 =")
    for label, point in (
        ("centroid", (1 / 3, 1 / 3, 1 / 3)),
        ("off-centre", (0.2, 0.3, 0.5)),
        ("near edge", (1e-3, 0.4995, 0.4995)),
        ("near corner", (0.998, 1e-3, 1e-3)),
    ):
        print(f"  {label:11}: {volume_element(point, 1.4):14.4f}")

    print("\n= flat case q = 0 =")
    field0 = grid_field(20, 0.0, 1e-3)
    print(
        f"  sqrt(det g) over {len(field0.points)} grid points: "
        f"min {field0.volume.min():.12f}, max {field0.volume.max():.12f}, "
        f"sqrt(3) = {math.sqrt(3.0):.12f}"
    )

    field = grid_field(60, 1.4, 1e-3)
    out = Path(__file__).with_name("simplex_field.csv")
    out.write_text(field_to_csv(field))
    print(f"\n  wrote {len(field.points)} sampled points to {out.name}")
    print(f"  (same layout as the geometry subcommand of the CLI)")


if __name__ == "__main__":
    main()
