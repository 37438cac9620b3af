"""Tour of the three correlation measures on a one-parameter family.

The family interpolates from a classical-looking state at theta = 0 to a
maximally discordant one at theta = pi/4 and back down.  Negativity,
the Hilbert-Schmidt measure and the trace-norm measure order the states
differently along the way: strictly d1 > sqrt(d2) > negativity below
pi/4, and d1 = sqrt(d2) at and above it.

Run:  python3 demos/correlation_measures_tour.py
"""

import numpy as np

from discordlab import FamilyParams, make_state
from discordlab.measures import d1_oracle, d1_x_with_method, d2_closed, d2_oracle, negativity
from discordlab.states import to_x_state


def row(theta):
    rho = make_state(FamilyParams("theta", theta=theta))
    d1, method = d1_x_with_method(to_x_state(rho))
    return d1, np.sqrt(d2_closed(rho)), negativity(rho), method


def main():
    print("theta/pi    d1        sqrt(d2)  negativity")
    for frac in np.linspace(0.0, 0.5, 11):
        d1, sq, neg, _ = row(np.pi * frac)
        marker = "  (equality region)" if frac >= 0.25 else ""
        print(f"  {frac:4.2f}    {d1:.6f}  {sq:.6f}  {neg:.6f}{marker}")

    # the closed forms against the brute-force sphere search
    print("\nclosed form vs minimization over all measurement axes:")
    for frac in (0.1, 0.25, 0.4):
        theta = np.pi * frac
        rho = make_state(FamilyParams("theta", theta=theta))
        d1, sq, neg, method = row(theta)
        d1_brute, axis = d1_oracle(rho)
        d2_brute, _ = d2_oracle(rho)
        print(f"  theta = {frac:.2f} pi: d1 {d1:.8f} vs oracle {d1_brute:.8f} "
              f"({method}), d2 {sq**2:.8f} vs {d2_brute:.8f}, "
              f"minimizing axis ({axis[0]:+.3f}, {axis[1]:+.3f}, {axis[2]:+.3f})")


if __name__ == "__main__":
    main()
