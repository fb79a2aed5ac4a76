#!/usr/bin/env python3
"""Smoke test of the python bindings: one pass through each main operation."""

import math
import sys

import _stostab as st

failures = []


def check(name, cond):
    print(("ok" if cond else "FAIL") + ": " + name)
    if not cond:
        failures.append(name)


def spec(a, b, c, m, calculus=None, **noise):
    s = st.SystemSpec()
    s.a, s.b, s.c, s.m = a, b, c, m
    for k, v in noise.items():
        setattr(s, k, v)
    if calculus is not None:
        s.calculus = calculus
    return s


# analysis and verdicts
rep = st.analyze(spec(-1, 0, 0, -1, e=1.0), st.StabilityNotion.MEAN_SQUARE)
check("diagonal benchmark is stable", rep.verdict == st.Verdict.STABLE)
check("benchmark bound is 2", abs(rep.bound.bound - 2.0) < 1e-12)

rep = st.analyze(spec(-1, 0, 0, -1, e=2.0), st.StabilityNotion.MEAN_SQUARE)
check("above-threshold spec is unstable", rep.verdict == st.Verdict.UNSTABLE)

# conversion and the moment oracle
s = spec(0, 1, -1, -1, st.Calculus.STRATONOVICH, g=-0.5, h=-0.5)
ito = st.stratonovich_to_ito(s)
check("conversion shifts the drift", abs(ito.m - (-1 + 0.125)) < 1e-15)
check("oracle accepts either calculus",
      st.ms_stable_by_moments(s) == st.ms_stable_by_moments(ito))

M = st.moment_matrix(spec(-1, 0, 0, -1))
check("moment matrix is 3x3", len(M) == 3 and len(M[0]) == 3 and M[0][0] == -2.0)

# certificates
ito_spec = spec(-2, 1, 1, -1, e=math.sqrt(0.5))
v = st.build_certificate(ito_spec, st.NoisePattern.ONLY_E,
                         st.StabilityNotion.PROBABILITY)
cert = st.verify_certificate(ito_spec, v)
check("certificate verifies", cert.v_positive_definite and
      cert.lv_negative_semidefinite and cert.circle_check_passed)

# simulation reproducibility
cfg = st.SimConfig()
cfg.dt, cfg.horizon, cfg.n_paths, cfg.seed = 1e-2, 2.0, 64, 9
one = st.simulate_ensemble(spec(-1, 0, 0, -1, e=0.5), cfg)
two = st.simulate_ensemble(spec(-1, 0, 0, -1, e=0.5), cfg)
check("fixed seed reproduces the ensemble",
      list(one.second_moment) == list(two.second_moment))
check("stable ensemble decays", one.ms_exponent > 0)

# sweep and bisection
grid = [0.25 * i for i in range(1, 16)]
res = st.sweep(spec(-1, 0, 0, -1), st.NoisePattern.ONLY_E, grid,
               st.StabilityNotion.MEAN_SQUARE)
check("sweep finds the threshold",
      res.empirical_threshold is not None and abs(res.empirical_threshold - 2.0) < 1e-6)

# oscillator workflow
osc = st.OscillatorSpec(1.0, 1.0, 0.5, 0.5)
check("equal-noise threshold", abs(st.prop1_threshold(osc) - 1.0) < 1e-12)
osc.calculus = st.Calculus.STRATONOVICH
check("converted equal-noise threshold",
      abs(st.prop2_threshold(osc) - (2 - math.sqrt(2))) < 1e-12)
check("oscillator maps to a system", st.oscillator_to_system(osc).c == -1.0)

# JSON parsing round trip
parsed = st.parse_system_spec('{"a":-1,"b":0,"c":0,"m":-1,"e":1}')
check("JSON spec parses", parsed.e == 1.0 and parsed.calculus == st.Calculus.ITO)

print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
