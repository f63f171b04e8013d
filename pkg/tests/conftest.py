from hypothesis import HealthCheck, settings

settings.register_profile(
    "qrr", deadline=None, suppress_health_check=[HealthCheck.too_slow], derandomize=True
)
settings.load_profile("qrr")


def coeff_list(s, n):
    """Rational coefficients of q^0..q^(n-1) of a QSeries."""
    return [s.coeff(e).re if s.coeff(e).is_rational() else s.coeff(e) for e in range(n)]
