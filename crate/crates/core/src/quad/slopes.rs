//! Closed-form slopes and offsets, all as exact surds.

use serde::Serialize;

use super::surd::{QuadSurd, Quadratic};

pub fn phi() -> QuadSurd {
    QuadSurd::from_parts(1, 1, 5, 2)
}

/// Survivor slope of the golden sieve on `aN+b`: the root in `(1, 2)` of
/// `aX² − aX − 1`.
pub fn slope_alpha(a: u64) -> QuadSurd {
    let a = a as i64;
    QuadSurd::from_parts(a, 1, (a * a + 4 * a) as u64, 2 * a)
}

pub fn alpha_poly(a: u64) -> Quadratic {
    Quadratic::new(a, -(a as i64), -1)
}

/// Deletion slope `aα + 1`.
pub fn deletion_slope(a: u64) -> QuadSurd {
    &slope_alpha(a) * a as i64 + 1
}

/// Frequency of ones in the gap word, `α − 1`.
pub fn ones_density(a: u64) -> QuadSurd {
    slope_alpha(a) - 1
}

/// Pointer slope of the double sieve: positive root of `aX² − (2a−1)X − 4`.
pub fn slope_gamma(a: u64) -> QuadSurd {
    let a = a as i64;
    QuadSurd::from_parts(2 * a - 1, 1, (4 * a * a + 12 * a + 1) as u64, 2 * a)
}

pub fn gamma_poly(a: u64) -> Quadratic {
    Quadratic::new(a, -(2 * a as i64 - 1), -4)
}

/// Target slope of the double sieve, `aγ + 2`.
pub fn double_target_slope(a: u64) -> QuadSurd {
    &slope_gamma(a) * a as i64 + 2
}

/// Survivor slope of the double sieve, from `1/γ + 1/(aγ+2) + 1/σ* = 1`.
///
/// Since `γ = 2(aγ+2)/(aγ+1)` this is `γ` itself.
pub fn double_survivor_slope(a: u64) -> QuadSurd {
    let inv = |x: QuadSurd| x.recip().expect("nonzero slope");
    inv(-inv(slope_gamma(a)) - inv(double_target_slope(a)) + 1)
}

/// The expression `(aγ² + 2γ)/(aγ + 1)`, which simplifies to `γ²/2` and does
/// not satisfy the density partition. Kept for reports.
pub fn double_survivor_slope_compound(a: u64) -> QuadSurd {
    let g = slope_gamma(a);
    let ai = a as i64;
    let num = &(&(&g * &g) * ai) + &(&g * 2);
    num / (&g * ai + 1)
}

/// Residual of `1/γ + 1/(aγ+2) + 1/σ* − 1`; zero exactly when the three
/// densities partition.
pub fn double_density_residual(a: u64) -> QuadSurd {
    let inv = |x: QuadSurd| x.recip().expect("nonzero slope");
    inv(slope_gamma(a)) + inv(double_target_slope(a)) + inv(double_survivor_slope(a)) - 1
}

/// `M_k = (k + √(k²+4))/2`.
pub fn metallic_mean(k: u64) -> QuadSurd {
    let k = k as i64;
    QuadSurd::from_parts(k, 1, (k * k + 4) as u64, 2)
}

/// `R_k = ((k+1) + √((k+1)²−4))/2`; rational `1` at `k = 1`.
pub fn reverse_mean(k: u64) -> QuadSurd {
    let k1 = k as i64 + 1;
    QuadSurd::from_parts(k1, 1, (k1 * k1 - 4) as u64, 2)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetallicSlopes {
    pub k: u64,
    #[serde(serialize_with = "display")]
    pub m: QuadSurd,
    #[serde(serialize_with = "display")]
    pub beta: QuadSurd,
    #[serde(serialize_with = "display")]
    pub r: QuadSurd,
    #[serde(serialize_with = "display")]
    pub beta_r: QuadSurd,
    #[serde(serialize_with = "display")]
    pub beta_j0_a: QuadSurd,
    #[serde(serialize_with = "display")]
    pub beta_j0_b: QuadSurd,
}

fn display<S: serde::Serializer>(x: &QuadSurd, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

/// Slopes and offsets for the shift-one hiccups `(1,1,k+1,k)` and `(1,1,k,k+1)`
/// and their shift-zero counterparts.
pub fn metallic_slopes(k: u64) -> MetallicSlopes {
    let m = metallic_mean(k);
    let r = reverse_mean(k);
    let km1 = k as i64 - 1;
    let beta = -(&(&m * km1) / &(&m + 1));
    // R_1 = 1 makes the quotient 0/0; its numerator vanishes, so take 0.
    let beta_r = if k == 1 {
        QuadSurd::integer(0)
    } else {
        -(&(&r * km1) / &(&r - 1))
    };
    let beta_j0_a = (-(&m * k as i64) + 1) / (&m + 1);
    let beta_j0_b = -(&r - 2);
    MetallicSlopes {
        k,
        m,
        beta,
        r,
        beta_r,
        beta_j0_a,
        beta_j0_b,
    }
}

/// Growth rate of the extraction sieve `C_{j,y,z}` on `aN+b`: the positive
/// root of `X² − azX − a(y−z)`, for either order of `y` and `z`.
pub fn extraction_slope(y: u64, z: u64, a: u64) -> QuadSurd {
    extraction_poly(y, z, a)
        .larger_root()
        .expect("nonnegative discriminant")
}

pub fn extraction_poly(y: u64, z: u64, a: u64) -> Quadratic {
    let (y, z, a) = (y as i64, z as i64, a as i64);
    Quadratic::new(1, -a * z, -a * (y - z))
}
