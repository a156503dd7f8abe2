//! Three-parameter Weibull–resilience (exponentiated Weibull) lifetime family.
//!
//! Density: f(t) = lambda*alpha*eta * (lambda t)^(alpha-1) *
//! [1 - exp(-(lambda t)^alpha)]^(eta-1) * exp(-(lambda t)^alpha).
//! At eta = 1 every function reduces to the two-parameter Weibull closed form.
//! The resilience parameter bends the hazard: alpha*eta controls the behavior
//! near the origin, alpha alone controls the tail, so eta != 1 produces
//! non-monotone (bathtub-like) hazards.

use crate::error::{Error, Result};
use crate::util::quad;
use serde::{Deserialize, Serialize};
use statrs::function::gamma as sf_gamma;

/// Survival level that defines the numerical support horizon.
pub const HORIZON_SURVIVAL: f64 = 1e-12;

/// Baseline lifetime family parameters.
///
/// `lambda` is a rate (1/years), `alpha` the Weibull shape, and `eta` the
/// resilience (exponentiation) parameter; all must be positive and finite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct WeibullResilience {
    lambda: f64,
    alpha: f64,
    eta: f64,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
struct RawParams {
    lambda: f64,
    alpha: f64,
    eta: f64,
}

impl TryFrom<RawParams> for WeibullResilience {
    type Error = Error;
    fn try_from(r: RawParams) -> Result<Self> {
        WeibullResilience::new(r.lambda, r.alpha, r.eta)
    }
}

impl From<WeibullResilience> for RawParams {
    fn from(p: WeibullResilience) -> Self {
        RawParams {
            lambda: p.lambda,
            alpha: p.alpha,
            eta: p.eta,
        }
    }
}

/// ln(1 - exp(-x)) for x > 0, computed without cancellation.
fn ln1mexp(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if x < std::f64::consts::LN_2 {
        (-(-x).exp_m1()).ln()
    } else {
        (-(-x).exp()).ln_1p()
    }
}

/// ln Gamma(a, x) (upper incomplete) by the asymptotic series, valid for
/// large x. Used only beyond the numerical support horizon where
/// x >= -ln(HORIZON_SURVIVAL) ~ 27.6.
fn ln_upper_gamma_asym(a: f64, x: f64) -> f64 {
    let mut series = 1.0;
    let mut term = 1.0;
    for k in 1..=6 {
        term *= (a - k as f64) / x;
        series += term;
    }
    (a - 1.0) * x.ln() - x + series.max(f64::MIN_POSITIVE).ln()
}

impl WeibullResilience {
    pub fn new(lambda: f64, alpha: f64, eta: f64) -> Result<Self> {
        for (name, v) in [("lambda", lambda), ("alpha", alpha), ("eta", eta)] {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be positive and finite, got {v}"
                )));
            }
        }
        Ok(Self { lambda, alpha, eta })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    /// (lambda t)^alpha
    fn x_of(&self, t: f64) -> f64 {
        if t == 0.0 {
            0.0
        } else {
            (self.alpha * (self.lambda * t).ln()).exp()
        }
    }

    /// Cumulative distribution function.
    pub fn cdf(&self, t: f64) -> Result<f64> {
        self.check_t(t)?;
        if t == 0.0 {
            return Ok(0.0);
        }
        let x = self.x_of(t);
        Ok((self.eta * ln1mexp(x)).exp().clamp(0.0, 1.0))
    }

    /// Survival function S(t) = 1 - F(t).
    pub fn survival(&self, t: f64) -> Result<f64> {
        self.check_t(t)?;
        if t == 0.0 {
            return Ok(1.0);
        }
        let x = self.x_of(t);
        Ok((-(self.eta * ln1mexp(x)).exp_m1()).clamp(0.0, 1.0))
    }

    /// ln S(t); falls back to the tail asymptote ln(eta) - x when the direct
    /// form underflows.
    pub fn ln_survival(&self, t: f64) -> Result<f64> {
        let s = self.survival(t)?;
        if s > 0.0 {
            Ok(s.ln())
        } else {
            Ok(self.eta.ln() - self.x_of(t))
        }
    }

    /// Density. At t = 0 the sign of alpha*eta - 1 decides the limit:
    /// +infinity (integrable singularity) when alpha*eta < 1, lambda*alpha*eta
    /// when equal, 0 when greater. The infinite value is a documented
    /// sentinel so integrators can treat the singularity explicitly.
    pub fn pdf(&self, t: f64) -> Result<f64> {
        self.check_t(t)?;
        if t == 0.0 {
            let ae = self.alpha * self.eta;
            return Ok(if ae < 1.0 {
                f64::INFINITY
            } else if ae == 1.0 {
                self.lambda * ae
            } else {
                0.0
            });
        }
        Ok(self.log_pdf(t)?.exp())
    }

    /// ln f(t) for t > 0, stable for eta < 1 near the origin and deep in the
    /// tail.
    pub fn log_pdf(&self, t: f64) -> Result<f64> {
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::Domain(format!("log_pdf requires t > 0, got {t}")));
        }
        let x = self.x_of(t);
        Ok(self.lambda.ln()
            + self.alpha.ln()
            + self.eta.ln()
            + (self.alpha - 1.0) * (self.lambda * t).ln()
            + (self.eta - 1.0) * ln1mexp(x)
            - x)
    }

    /// Quantile function Q(u) = (1/lambda) * (-ln(1 - u^(1/eta)))^(1/alpha).
    ///
    /// u = 1 is rejected: callers sample with u in [0, 1).
    pub fn quantile(&self, u: f64) -> Result<f64> {
        if !(0.0..1.0).contains(&u) {
            return Err(Error::Domain(format!(
                "quantile requires u in [0, 1), got {u}"
            )));
        }
        if u == 0.0 {
            return Ok(0.0);
        }
        let w = (u.ln() / self.eta).exp(); // u^(1/eta)
        let x = if w < 0.5 {
            -(-w).ln_1p()
        } else {
            -(-(u.ln() / self.eta).exp_m1()).ln()
        };
        Ok((x.ln() / self.alpha).exp() / self.lambda)
    }

    /// Time at which S(t) = s, used to pick integration horizons.
    pub fn survival_inverse(&self, s: f64) -> Result<f64> {
        if !(0.0 < s && s < 1.0) {
            return Err(Error::Domain(format!(
                "survival_inverse requires s in (0, 1), got {s}"
            )));
        }
        // S(t) = s  <=>  exp(-x) = 1 - (1-s)^(1/eta)
        let ln_one_minus_s = (-s).ln_1p();
        let e = -(ln_one_minus_s / self.eta).exp_m1(); // 1 - (1-s)^(1/eta)
        let x = -e.ln();
        Ok((x.ln() / self.alpha).exp() / self.lambda)
    }

    /// Numerical support horizon: the time at which survival drops below
    /// [`HORIZON_SURVIVAL`].
    pub fn horizon(&self) -> f64 {
        self.survival_inverse(HORIZON_SURVIVAL)
            .expect("fixed level in (0,1)")
    }

    /// Hazard rate f(t)/S(t). Errors when the survival function has
    /// underflowed to zero.
    pub fn hazard(&self, t: f64) -> Result<f64> {
        let s = self.survival(t)?;
        if s <= 0.0 {
            return Err(Error::SurvivalUnderflow { t });
        }
        Ok(self.pdf(t)? / s)
    }

    /// Mass of the survival function beyond `t`, i.e. the integral of S from
    /// t to infinity, using the tail approximation S(u) ~ eta*exp(-(lambda
    /// u)^alpha). Only accurate where exp(-x) is already tiny; callers use it
    /// past the horizon.
    pub fn tail_mass(&self, t: f64) -> f64 {
        self.ln_tail_mass(t).exp()
    }

    /// ln of [`Self::tail_mass`], usable even where the mass underflows.
    pub fn ln_tail_mass(&self, t: f64) -> f64 {
        let a = 1.0 / self.alpha;
        let x = self.x_of(t);
        self.eta.ln() - (self.alpha * self.lambda).ln() + ln_upper_gamma_asym(a, x)
    }

    /// Same tail mass through the library incomplete-gamma; used to
    /// cross-check the asymptotic series in tests.
    #[doc(hidden)]
    pub fn tail_mass_gamma(&self, t: f64) -> f64 {
        let a = 1.0 / self.alpha;
        let x = self.x_of(t);
        self.eta * sf_gamma::gamma_ur(a, x) * sf_gamma::gamma(a) / (self.alpha * self.lambda)
    }

    /// Mean lifetime: integral of S over [0, infinity) by adaptive
    /// quadrature on [0, horizon] plus the analytic tail bound.
    pub fn mean(&self) -> Result<f64> {
        let hi = self.horizon();
        let p = *self;
        let body = quad::integrate(move |u| p.survival(u).unwrap_or(0.0), 0.0, hi, 1e-8)?;
        Ok(body + self.tail_mass(hi))
    }

    /// Mean residual life m(t) = int_t^inf S(u) du / S(t).
    pub fn mrl(&self, t: f64) -> Result<f64> {
        let s = self.survival(t)?;
        if s < 1e-250 {
            return Err(Error::SurvivalUnderflow { t });
        }
        let hi = self.horizon().max(t * 1.0625);
        let p = *self;
        let body = quad::integrate(move |u| p.survival(u).unwrap_or(0.0), t, hi, 1e-8)?;
        Ok((body + self.tail_mass(hi)) / s)
    }

    fn check_t(&self, t: f64) -> Result<()> {
        if t < 0.0 || t.is_nan() {
            return Err(Error::Domain(format!("time must be >= 0, got {t}")));
        }
        Ok(())
    }
}
