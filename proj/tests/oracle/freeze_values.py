"""Independent high-precision oracle for the frozen expected values used in tests.

Every value is computed by mpmath's Talbot inverse Laplace transform at 40
digits (or by elementary closed forms) and cross-checked against a direct
mpmath series where one exists.  Run once; results are pinned in
tests/frozen_values.hpp.
"""
import mpmath as mp

mp.mp.dps = 40


def inv(F, t):
    return mp.invertlaplace(F, t, method='talbot')


def series(alpha, beta, gamma, z):
    alpha, beta, gamma, z = map(mp.mpf, (alpha, beta, gamma, z))
    return mp.nsum(lambda k: mp.rf(gamma, k) * z**k / (mp.factorial(k) * mp.gamma(alpha * k + beta)), [0, mp.inf])


def show(name, v, check=None):
    line = f"{name} = {mp.nstr(v, 20)}"
    if check is not None:
        line += f"   (series check diff {mp.nstr(abs(v - check), 3)})"
    print(line)


# E^{0.8}_{0.7,1}(-1)
v = inv(lambda s: s**-1 * (1 + s**mp.mpf(-0.7))**mp.mpf(-0.8), 1)
show("mlf3_a07_b1_g08_zm1", v, series(0.7, 1, 0.8, -1))

# E_{1/2}(-1) = e * erfc(1), erfc by quadrature
erfc1 = 2 / mp.sqrt(mp.pi) * mp.quad(lambda x: mp.exp(-x * x), [1, mp.inf])
show("mlf2_a05_b1_zm1", mp.e * erfc1, series(0.5, 1, 1, -1))

# kernel alpha=0.7 beta=0.56 gamma=0.8 omega=-1 at t=2
v = inv(lambda s: s**mp.mpf(-0.56) * (1 + s**mp.mpf(-0.7))**mp.mpf(-0.8), 2)
show("kernel_a07_b056_g08_t2", v, mp.mpf(2)**(mp.mpf(0.56) - 1) * series(0.7, 0.56, 0.8, -mp.mpf(2)**mp.mpf(0.7)))

# regularized derivative of t^2, (0.7, 0.4, 0.8, -1) at t = 1, 2, 3
for t in (1, 2, 3):
    v = inv(lambda s: s**mp.mpf(0.4) * (1 + s**mp.mpf(-0.7))**mp.mpf(0.8) * 2 / s**3, t)
    # same quantity from the Prabhakar integral of f'=2t: 2 t^{2-0.6} E^{-0.8}_{0.7,2.6}(-t^0.7)
    chk = 2 * mp.mpf(t)**(mp.mpf(2) - mp.mpf(0.4)) * series(0.7, 2.6, -0.8, -mp.mpf(t)**mp.mpf(0.7))
    show(f"pderiv_t2_a07_b04_g08_t{t}", v, chk)

# Caputo-Fabrizio of t^2, alpha=0.3, M=1, t=2 (closed form)
al = mp.mpf(3) / 10
lam = al / (1 - al)
t = mp.mpf(2)
cf = 2 / (1 - al) * (t / lam - (1 - mp.exp(-lam * t)) / lam**2)
cfq = 1 / (1 - al) * mp.quad(lambda u: mp.exp(-lam * (t - u)) * 2 * u, [0, t])
show("cf_t2_a03_t2", cf, cfq)

# creep compliance a=b=1, (0.7,0.6,0.8,-1), t=2
v = inv(lambda s: 1 / s + 1 / (s**mp.mpf(1.6) * (1 + s**mp.mpf(-0.7))**mp.mpf(0.8)), 2)
chk = 1 + mp.mpf(2)**mp.mpf(0.6) * series(0.7, 1.6, 0.8, -mp.mpf(2)**mp.mpf(0.7))
show("creep_a1_b1_a07_b06_g08_t2", v, chk)

# relaxation modulus a=b=1, (0.7,0.7,0.8,-1), t=1
v = inv(lambda s: (1 / s) / (1 + 1 / (s**mp.mpf(0.7) * (1 + s**mp.mpf(-0.7))**mp.mpf(0.8))), 1)
show("relax_a1_b1_a07_b07_g08_t1", v)
