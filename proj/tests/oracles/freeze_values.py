"""Arbitrary-precision reference values frozen into the C++ unit tests.

Run with `python3 freeze_values.py`; every printed value appears verbatim in
tests/*.cpp. The formulas here are written directly from the closed forms and
share no code with the library.
"""
import mpmath as mp

mp.mp.dps = 40
pi = mp.pi


def z(omega, T):
    if T == 0:
        return mp.sign(omega)
    return mp.coth(omega / (2 * T))


def g(j, k):
    if j == k:
        return mp.mpf(0)
    return (-1) ** (k + j) * mp.mpf(2 * k * j) / (k * k - j * j)


def show(name, value):
    print(f"{name} = {mp.nstr(value, 20)}")


# thermal
show("z(T=1, w=2)", z(2, 1))

# micro kernels
d = 1
T = 1
show("nu_2(T=1,t=0.3)", z(2 * pi, T) / (2 * 2 * pi) * mp.cos(2 * pi * mp.mpf("0.3")))

# pair kernels, T=1, k=1, j=2, d=1, t=0.1
t = mp.mpf("0.1")
w1, w2 = pi, 2 * pi
z1, z2 = z(w1, 1), z(w2, 1)
show("nu+(1,2,0.1)", (z1 * z2 + 1) / 8 * mp.cos((w1 + w2) * t))
show("nu-(1,2,0.1)", (z1 * z2 - 1) / 8 * mp.cos((w1 - w2) * t))
show("mu+(1,2,0.1)", -(z1 + z2) / 8 * mp.sin((w1 + w2) * t))
show("mu-(1,2,0.1)", (z1 - z2) / 8 * mp.sin((w1 - w2) * t))

# spectral coefficients, T=2, k=1, j=3, d=1
w1, w3 = pi, 3 * pi
z1, z3 = z(w1, 2), z(w3, 2)
pref = w1 * w3 / (4 * (w1 + w3) ** 2)
show("nu_13(T=2)", pref * (z1 * z3 + 1))
show("im_mu_13(T=2)", pref * (z1 + z3))


def kernel00(t, K, T, d=1):
    Np = Nm = M = mp.mpf(0)
    for k in range(1, K + 1):
        w = k * pi / d
        zk = z(w, T)
        Np += w**2 * (zk * zk + 1) / 8 * mp.cos(2 * w * t)
        Nm += w**2 * (zk * zk - 1) / 8
        M += w**2 * (-(2 * zk) / 8) * mp.sin(2 * w * t)
    return Np, Nm, M


def kernel11(t, K, T, d=1):
    N = M = mp.mpf(0)
    for k in range(1, K + 1):
        for j in range(1, K + 1):
            if k == j:
                continue
            wk, wj = k * pi / d, j * pi / d
            zk, zj = z(wk, T), z(wj, T)
            cp = g(k, j) ** 2 * (wk - wj) ** 2 / (wk * wj)
            cm = g(k, j) ** 2 * (wk + wj) ** 2 / (wk * wj)
            N += cp * (zk * zj + 1) / 8 * mp.cos((wk + wj) * t)
            N += cm * (zk * zj - 1) / 8 * mp.cos((wk - wj) * t)
            M += cp * (-(zk + zj) / 8) * mp.sin((wk + wj) * t)
            M += cm * ((zk - zj) / 8) * mp.sin((wk - wj) * t)
    return N, M


Np, Nm, M = kernel00(mp.mpf("0.05"), 64, 0)
show("N+00(T=0,K=64,t=0.05)", Np)
show("M+00(T=0,K=64,t=0.05)", M)
N, M = kernel11(mp.mpf("0.1"), 32, 0)
show("N11(T=0,K=32,t=0.1)", N)
show("M11(T=0,K=32,t=0.1)", M)
N, M = kernel11(mp.mpf("0.1"), 8, 1)
show("N11(T=1,K=8,t=0.1)", N)
show("M11(T=1,K=8,t=0.1)", M)

# mass shift, K=16, sigma=0.1, d=1, T=0
dm = mp.mpf(0)
for k in range(1, 17):
    for j in range(1, 17):
        w = k * pi
        dm += g(k, j) ** 2 * (1 / (2 * w)) * mp.exp(-mp.mpf("0.1") * w)
show("mass_shift(K=16,sigma=0.1)", dm)

# completeness integral R_kj at q = d = 1
def dphi(k, zz, q=mp.mpf(1)):
    return (-mp.sqrt(2) / 2 * q ** mp.mpf(-1.5) * mp.sin(k * pi * zz / q)
            - mp.sqrt(2 / q) * mp.cos(k * pi * zz / q) * k * pi * zz / q**2)

for k, j in [(1, 1), (1, 2), (2, 3)]:
    show(f"R_{k}{j}", mp.quad(lambda zz: dphi(k, zz) * dphi(j, zz), [0, 1]))

# Casimir: high-temperature renormalized density, exact via trigamma
T = 50 * pi
for sig in [mp.mpf("0.01")]:
    reg = mp.nsum(lambda k: mp.coth(k * pi / (2 * T)) * k * pi / 2 * mp.exp(-sig * k * pi), [1, mp.inf])
    free = (1 / sig**2 + 2 * T**2 * mp.psi(1, 1 + sig * T)) / (2 * pi)
    show("eps_reg(T=50pi,sigma=0.01)", reg)
    show("eps_free(T=50pi,sigma=0.01)", free)
