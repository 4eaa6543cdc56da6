"""Independent reference values for the C++ tests (numpy + cvxpy).

Run: python3 tests/oracle/oracle_values.py
The printed numbers are frozen into the GoogleTest suites.
"""
import itertools

import cvxpy as cp
import numpy as np


def proj(v):
    v = np.asarray(v, dtype=complex)
    v = v / np.linalg.norm(v)
    return np.outer(v, v.conj())


def bloch_povm(theta, phi=0.0):
    up = np.array([np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)])
    down = np.array([-np.exp(-1j * phi) * np.sin(theta / 2), np.cos(theta / 2)])
    return [proj(up), proj(down)]


def eta_g(meas):
    k, o, d = len(meas), len(meas[0]), meas[0][0].shape[0]
    labels = list(itertools.product(range(o), repeat=k))
    G = [cp.Variable((d, d), hermitian=True) for _ in labels]
    eta = cp.Variable()
    cons = [g >> 0 for g in G] + [sum(G) == np.eye(d)]
    for x in range(k):
        for a in range(o):
            marg = sum(G[j] for j, l in enumerate(labels) if l[x] == a)
            cons.append(marg - eta * meas[x][a] >> 0)
    cp.Problem(cp.Maximize(eta), cons).solve(solver="CLARABEL")
    return eta.value


def assemblage(rho, meas, d):
    out = []
    for povm in meas:
        row = []
        for A in povm:
            M = (np.kron(A, np.eye(d)) @ rho).reshape(d, d, d, d)
            row.append(np.einsum("iaib->ab", M))
        out.append(row)
    return out


def steering_robustness(sig):
    k, o, d = len(sig), len(sig[0]), sig[0][0].shape[0]
    labels = list(itertools.product(range(o), repeat=k))
    S = [cp.Variable((d, d), hermitian=True) for _ in labels]
    cons = [s >> 0 for s in S]
    for x in range(k):
        for a in range(o):
            cons.append(sum(S[j] for j, l in enumerate(labels) if l[x] == a) - sig[x][a] >> 0)
    prob = cp.Problem(cp.Minimize(cp.real(sum(cp.trace(s) for s in S))), cons)
    prob.solve(solver="CLARABEL")
    return prob.value - 1


def mub_d3():
    w = np.exp(2j * np.pi / 3)
    comp = [proj(e) for e in np.eye(3)]
    fourier = [proj([w ** (j * n) for n in range(3)]) for j in range(3)]
    return [comp, fourier]


def isotropic(d, v):
    phi = np.eye(d).reshape(d * d) / np.sqrt(d)
    return v * np.outer(phi, phi) + (1 - v) * np.eye(d * d) / d ** 2


def main():
    print("eta_g qubit pair at 60 deg:", eta_g([bloch_povm(0), bloch_povm(np.pi / 3)]))
    print("eta_g qubit Z, X, (X+Z)/sqrt2:",
          eta_g([bloch_povm(0), bloch_povm(np.pi / 2), bloch_povm(np.pi / 4)]))
    print("SR d=3 k=2 isotropic v=0.8:", steering_robustness(assemblage(isotropic(3, 0.8), mub_d3(), 3)))
    t = 0.3
    psi = np.zeros(4)
    psi[0], psi[3] = np.cos(t), np.sin(t)
    rho = np.outer(psi, psi)
    print("SR partially entangled Z, X:",
          steering_robustness(assemblage(rho, [bloch_povm(0), bloch_povm(np.pi / 2)], 2)))
    print("spectrum isotropic d=2 v=0.5:", np.linalg.eigvalsh(isotropic(2, 0.5)))
    print("real embedding of Pauli-Y:",
          np.linalg.eigvalsh(np.block([[np.zeros((2, 2)), np.array([[0, 1], [-1, 0]])],
                                       [np.array([[0, -1], [1, 0]]), np.zeros((2, 2))]])))
    x_basis = [proj([1, 1]), proj([1, -1])]
    z_basis = [proj([1, 0]), proj([0, 1])]
    print("lhs_norm Z, X:", max(np.linalg.eigvalsh(z + x)[-1] for z in z_basis for x in x_basis))
    h = lambda n: (1 + 1 / np.sqrt(n)) / 2
    rec = lambda k, n: h(n) ** int(np.log2(k)) * (1 - 2 * (1 - h(n)) * (1 - 2 ** int(np.log2(k)) / k))
    clon = lambda k, n: (1 + 2 * (k - 1) / (n + 1)) / k
    for n in (2, 6, 100):
        print("crossover", n, max(k for k in range(2, 5000) if rec(k, n) > clon(k, n)))
    print("h_recursive(3,2):", rec(3, 2))


if __name__ == "__main__":
    main()
