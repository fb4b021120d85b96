"""Writes zeta_reference.hpp: mpmath values of zeta, zeta' and (s-1)zeta on
the 10 x 10 test grid, plus a few single points. Run once; the output is
checked in and never regenerated by the build."""

import mpmath as mp

mp.mp.dps = 50

SIGMAS = [-1.5 + 0.5 * i for i in range(10)]
TS = [0.25 * (40 / 0.25) ** (j / 9) for j in range(10)]


def fmt(x):
    return mp.nstr(x, 40, min_fixed=-5, max_fixed=5)


def row(s):
    z = mp.zeta(s)
    dz = mp.zeta(s, derivative=1)
    return z, dz


lines = [
    "#pragma once",
    "",
    "// Generated by generate_reference.py (mpmath, 50 digits). Do not edit.",
    "",
    "namespace oracle {",
    "",
    "struct ZetaRef {",
    "  double sigma, t;",
    "  const char* re; const char* im;",
    "  const char* d_re; const char* d_im;",
    "};",
    "",
    "inline constexpr ZetaRef kGrid[] = {",
]
for sg in SIGMAS:
    for t in TS:
        s = mp.mpc(mp.mpf(sg), mp.mpf(t))  # exact binary doubles
        z, dz = row(s)
        lines.append(
            f'    {{{sg!r}, {t!r}, "{fmt(z.real)}", "{fmt(z.imag)}", "{fmt(dz.real)}", "{fmt(dz.imag)}"}},'
        )
lines += ["};", ""]

lines.append('inline constexpr const char* kZetaHalf = "' + fmt(mp.zeta(0.5)) + '";')
lines.append('inline constexpr const char* kZetaThree = "' + fmt(mp.zeta(3)) + '";')
lines.append('inline constexpr const char* kZetaPrime2 = "' + fmt(mp.zeta(2, derivative=1)) + '";')
big = mp.mpc(1, 1000)
zb = mp.zeta(big)
lines.append('inline constexpr const char* kZeta1p1000i_re = "' + fmt(zb.real) + '";')
lines.append('inline constexpr const char* kZeta1p1000i_im = "' + fmt(zb.imag) + '";')
lines += ["", "}  // namespace oracle", ""]

open(__file__.replace("generate_reference.py", "zeta_reference.hpp"), "w").write("\n".join(lines))
