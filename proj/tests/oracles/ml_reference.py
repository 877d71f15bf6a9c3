"""High-precision Mittag-Leffler reference values.

Sums the defining power series with mpmath at a working precision large
enough to absorb the cancellation of alternating terms. Output is pasted
into tests/ml_reference_values.inc.
"""
import mpmath as mp


def ml_series(alpha, beta, z):
    alpha, beta, z = mp.mpf(alpha), mp.mpf(beta), mp.mpf(z)
    # enough digits to survive the largest term
    peak = 0
    k = 0
    while True:
        lt = k * mp.log(abs(z)) - mp.loggamma(alpha * k + beta) if z != 0 else -mp.loggamma(beta)
        peak = max(peak, lt)
        if k > 10 and lt < peak - 200:
            break
        k += 1
        if z == 0:
            break
    with mp.workdps(int(peak / mp.log(10)) + 60):
        s = mp.mpf(0)
        k = 0
        zz = mp.mpf(z)
        while True:
            t = zz**k * mp.rgamma(alpha * k + beta)
            s += t
            if k > 10 and abs(t) < mp.mpf(10) ** (-60) * max(abs(s), mp.mpf(10) ** (-300)):
                break
            k += 1
        return +s


if __name__ == "__main__":
    mp.mp.dps = 40
    alphas = ["0.5", "0.8", "1", "1.25", "1.55", "1.9", "2"]
    betas = ["0.5", "1", "2", "2.5", "3"]
    zs = ["-50", "-20", "-7", "-5.5", "-4.5", "-3", "-1", "0.5", "3", "4.5", "5.5", "7", "10"]
    for a in alphas:
        for b in betas:
            for z in zs:
                v = ml_series(a, b, z)
                print("    {%s, %s, %s, %s}," % (a, b, z, mp.nstr(v, 20, min_fixed=-1000, max_fixed=1000) if False else mp.nstr(v, 20)))
    # first positive zero of E_{1.55,2}(-x)
    f = lambda x: ml_series("1.55", "2", -x)
    print("# zero", mp.findroot(lambda x: ml_series("1.55", "2", -x), 5))
    print("# E_{1.55,1}(-1) =", mp.nstr(ml_series("1.55", "1", "-1"), 20))
    print("# e*erfc(1) =", mp.nstr(mp.e * mp.erfc(1), 20))
