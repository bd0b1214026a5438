//! The false theta function `T_{a,b}(z) = Σ_{n≥1} (-1)^{n-1} e^{-(an²+bn)z}`
//! evaluated three ways: direct summation, an Euler-transform route, and the
//! uniform small-`z` expansion in logistic derivatives.

use rug::ops::Pow;
use rug::{Complex, Float, Integer, Rational};

use crate::error::{Error, Result};
use crate::kernel::{shared_kernel, LogisticKernel};
use crate::precision::Precision;

#[derive(Debug, Clone)]
pub struct FalseThetaParams {
    pub a: Float,
    pub b: Float,
    pub z: Complex,
}

impl FalseThetaParams {
    pub fn new(a: Float, b: Float, z: Complex) -> Result<Self> {
        if !(a > 0) {
            return Err(Error::InvalidArgument(format!("a must be positive, got {a}")));
        }
        if !(*z.real() > 0) {
            return Err(Error::InvalidArgument(format!("Re z must be positive, got {}", z.real())));
        }
        Ok(Self { a, b, z })
    }

    /// Real `a`, `b`, `z` at the given precision.
    pub fn real(prec: Precision, a: f64, b: f64, z: f64) -> Result<Self> {
        Self::new(prec.float(a), prec.float(b), prec.complex((z, 0.0)))
    }

    pub fn is_real(&self) -> bool {
        self.z.imag().is_zero()
    }

    /// The sector `|Im z| <= Re z` where the asymptotic routes apply.
    fn check_sector(&self) -> Result<()> {
        if self.z.imag().clone().abs() > *self.z.real() {
            return Err(Error::InvalidArgument("asymptotic routes need |Im z| <= Re z".into()));
        }
        Ok(())
    }

    fn real_z(&self) -> Result<&Float> {
        if !self.is_real() {
            return Err(Error::InvalidArgument("this route needs real z".into()));
        }
        Ok(self.z.real())
    }
}

/// Evaluator carrying precision, the shared derivative kernel and iteration
/// limits.
#[derive(Debug, Clone, Copy)]
pub struct FalseTheta {
    prec: Precision,
    kernel: &'static LogisticKernel,
    max_terms: u64,
    euler_k: usize,
}

impl FalseTheta {
    pub const DEFAULT_MAX_TERMS: u64 = 5_000_000;
    pub const DEFAULT_EULER_K: usize = 8;

    pub fn new(prec: Precision) -> Self {
        Self {
            prec,
            kernel: shared_kernel(),
            max_terms: Self::DEFAULT_MAX_TERMS,
            euler_k: Self::DEFAULT_EULER_K,
        }
    }

    pub fn with_max_terms(mut self, max_terms: u64) -> Self {
        self.max_terms = max_terms;
        self
    }

    pub fn with_euler_k(mut self, k: usize) -> Self {
        assert!(k >= 1);
        self.euler_k = k;
        self
    }

    pub fn precision(&self) -> Precision {
        self.prec
    }

    pub fn kernel(&self) -> &'static LogisticKernel {
        self.kernel
    }

    fn work_bits(&self) -> u32 {
        self.prec.bits_with_guard(64)
    }

    /// `T_{a,b}(z)` by direct summation, stopping once the magnitude of the
    /// next term is below `tol`.
    pub fn t_direct(&self, params: &FalseThetaParams, tol: &Float) -> Result<Complex> {
        self.t_direct_weighted(0, params, tol)
    }

    /// `Σ_{n≥1} (-1)^{n-1} n^ℓ e^{-(an²+bn)z}` by direct summation.
    pub fn t_direct_weighted(&self, ell: u32, params: &FalseThetaParams, tol: &Float) -> Result<Complex> {
        let bits = self.work_bits();
        let mut sum = Complex::new(bits);
        self.walk_terms(ell, params, tol, |_, term| sum += term)?;
        Ok(Complex::with_val(self.prec.bits(), sum))
    }

    /// The first `count` partial sums of `T_{a,b}(z)` for real `z`.
    pub fn partial_sums(&self, params: &FalseThetaParams, count: usize) -> Result<Vec<Float>> {
        params.real_z()?;
        let bits = self.work_bits();
        let mut out = Vec::with_capacity(count);
        let mut sum = Float::new(bits);
        let tiny = Float::with_val(bits, 0);
        let _ = self.walk_terms(0, params, &tiny, |n, term| {
            if (n as usize) <= count {
                sum += term.real();
                out.push(Float::with_val(self.prec.bits(), &sum));
            }
        });
        out.truncate(count);
        Ok(out)
    }

    /// Visits `(n, (-1)^{n-1} n^ℓ e^{-(an²+bn)z})` for `n = 1, 2, ...`. The
    /// exponential is advanced by the ratio `e^{-(a(2n+1)+b)z}`, itself
    /// updated by `e^{-2az}` per step.
    fn walk_terms(
        &self,
        ell: u32,
        params: &FalseThetaParams,
        tol: &Float,
        mut visit: impl FnMut(u64, &Complex),
    ) -> Result<()> {
        let bits = self.work_bits();
        let a = Float::with_val(bits, &params.a);
        let b = Float::with_val(bits, &params.b);
        let z = Complex::with_val(bits, &params.z);
        let x = z.real().clone();
        // |term| = n^ℓ e^{-(an²+bn)x} is decreasing once ℓ/n < (2an+b)x
        let decreasing_from = |n: u64| -> bool {
            let lhs = Float::with_val(53, ell) / n;
            let rhs = Float::with_val(53, Float::with_val(53, &a * (2 * n)) + &b) * &x;
            lhs <= rhs
        };
        let mut exp_term = Complex::with_val(bits, -Complex::with_val(bits, &z * Float::with_val(bits, &a + &b))).exp();
        let mut ratio = Complex::with_val(bits, -Complex::with_val(bits, &z * Float::with_val(bits, 3 * a.clone() + &b))).exp();
        let step = Complex::with_val(bits, -Complex::with_val(bits, &z * Float::with_val(bits, 2 * a.clone()))).exp();
        for n in 1..=self.max_terms {
            let mut term = exp_term.clone();
            if ell > 0 {
                term *= Integer::from(n).pow(ell);
            }
            if n % 2 == 0 {
                term = -term;
            }
            visit(n, &term);
            exp_term *= &ratio;
            ratio *= &step;
            let next_mag = Float::with_val(bits, exp_term.abs_ref()) * Integer::from(n + 1).pow(ell);
            if next_mag < *tol && decreasing_from(n + 1) {
                return Ok(());
            }
            if exp_term.real().is_zero() && exp_term.imag().is_zero() {
                return Ok(());
            }
        }
        Err(Error::NoConvergence(self.max_terms))
    }

    /// `T_{a,b}(z) = 1 - Σ_{n≥0} x^n h(n)` with `x = -e^{-bz}` and
    /// `h(n) = e^{-an²z}`, the sum taken through the Euler transform with
    /// this evaluator's `K`. Real `z` only.
    pub fn t_euler(&self, params: &FalseThetaParams) -> Result<Float> {
        let z = params.real_z()?.clone();
        let bits = self.work_bits();
        let x = -Float::with_val(bits, -Float::with_val(bits, &params.b * &z)).exp();
        let az = Float::with_val(bits, &params.a * &z);
        let h = |n: u64| Float::with_val(bits, -Float::with_val(bits, &az * (n * n))).exp();
        let tol = Float::with_val(bits, Float::i_exp(1, -(bits as i32)));
        let s = euler_transform_sum(&h, &x, self.euler_k, &tol, self.max_terms)?;
        Ok(Float::with_val(self.prec.bits(), 1u32 - s))
    }

    /// Uniform expansion of `Σ (-1)^{n-1} n^ℓ e^{-(an²+bn)z}`:
    /// `(-1)^ℓ Σ_{k<p} (-az)^k/k! · D_{2k+ℓ}(bz)`, valid for `|Im z| <= Re z`
    /// uniformly in `b >= 0` with error `O(|z|^p)`.
    pub fn t_uniform(&self, ell: u32, params: &FalseThetaParams, p: u32) -> Result<Complex> {
        params.check_sector()?;
        let needed = 2 * p as usize + ell as usize;
        if needed > self.kernel.max_order() {
            return Err(Error::OrderTooHigh { requested: needed, max: self.kernel.max_order() });
        }
        let bits = self.work_bits();
        let z = Complex::with_val(bits, &params.z);
        let alpha = Complex::with_val(bits, &z * &params.b);
        let top = if p == 0 { 0 } else { 2 * (p as usize - 1) + ell as usize };
        let d = self.kernel.eval_all_complex(top, &alpha, Precision::new(self.prec.digits() + 20))?;
        let neg_az = -Complex::with_val(bits, &z * &params.a);
        let mut power = Complex::with_val(bits, 1);
        let mut sum = Complex::new(bits);
        for k in 0..p as usize {
            if k > 0 {
                power *= &neg_az;
                power /= k as u32;
            }
            sum += Complex::with_val(bits, &power * &d[2 * k + ell as usize]);
        }
        if ell % 2 == 1 {
            sum = -sum;
        }
        Ok(Complex::with_val(self.prec.bits(), sum))
    }

    /// `∂_z^J T_{a,b+μ}(z) ≈ Σ_{k<p} z^k P_{k,J}(μ,a,b,∂_α) D_0(α)|_{α=bz}`
    /// for real `z > 0`.
    pub fn t_z_derivative_asym(&self, j: u32, mu: &Float, params: &FalseThetaParams, p: u32) -> Result<Float> {
        let z = params.real_z()?.clone();
        let top = 2 * (p.max(1) as usize - 1 + j as usize);
        if top > self.kernel.max_order() {
            return Err(Error::OrderTooHigh { requested: top, max: self.kernel.max_order() });
        }
        let bits = self.work_bits();
        let alpha = Float::with_val(bits, &params.b * &z);
        let d = self.kernel.eval_all(top, &alpha, Precision::new(self.prec.digits() + 20))?;
        let mut sum = Float::new(bits);
        let mut z_pow = Float::with_val(bits, 1);
        for k in 0..p {
            let coeffs = p_kj_coefficients(k, j, mu, &params.a, &params.b, bits);
            for (order, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    sum += Float::with_val(bits, c * &d[order]) * &z_pow;
                }
            }
            z_pow *= &z;
        }
        Ok(Float::with_val(self.prec.bits(), sum))
    }

    /// Partial sum `Σ_{n<N} E_n(b/2a) H_n(0)/n! (az)^{n/2}`, which
    /// approximates `2 e^{-b²z/4a} (1 - T_{a,b}(z))` for small `z`.
    pub fn t_euler_poly_expansion(&self, a: &Float, b: &Float, z: &Float, terms: u32) -> Float {
        let bits = self.work_bits();
        let x = Float::with_val(bits, b / Float::with_val(bits, 2 * a.clone()));
        let sqrt_az = Float::with_val(bits, a * z).sqrt();
        let mut sum = Float::new(bits);
        let mut factorial = Integer::from(1);
        for n in 0..terms {
            if n > 0 {
                factorial *= n;
            }
            let h = hermite_number(n);
            if h == 0 {
                continue;
            }
            let e = euler_polynomial(n, &x);
            let coeff = Float::with_val(bits, e * h) / &factorial;
            sum += coeff * Float::with_val(bits, sqrt_az.clone().pow(n));
        }
        Float::with_val(self.prec.bits(), sum)
    }
}

/// Coefficients of `∂_α^i` in
/// `P_{k,J}(μ,a,b,∂) = (1/k!) Σ_{r≤J} Σ_{s≤k+J-r} C(J,r) C(J-r+k,s) μ^{k+J-s-r} (-a)^s b^r ∂^{s+k+J}`,
/// indexed by `i`.
pub fn p_kj_coefficients(k: u32, j: u32, mu: &Float, a: &Float, b: &Float, bits: u32) -> Vec<Float> {
    let top = (2 * (k + j)) as usize;
    let mut out = vec![Float::new(bits); top + 1];
    let k_fact = Integer::from(Integer::factorial(k));
    let neg_a = Float::with_val(bits, -a);
    for r in 0..=j {
        for s in 0..=(k + j - r) {
            let binom = Integer::from(Integer::binomial_u(j, r)) * Integer::from(Integer::binomial_u(j - r + k, s));
            let mut term = Float::with_val(bits, &binom);
            term *= Float::with_val(bits, mu.pow(k + j - s - r));
            term *= Float::with_val(bits, (&neg_a).pow(s));
            term *= Float::with_val(bits, b.pow(r));
            term /= &k_fact;
            out[(s + k + j) as usize] += term;
        }
    }
    out
}

/// `Σ_{n≥0} x^n h(n)` via
/// `Σ_{r<K} x^r Δ^r h(0) / (1-x)^{r+1} + x^K/(1-x)^K Σ_{n≥0} x^n Δ^K h(n)`.
///
/// The remainder series is summed until `K + 2` consecutive terms fall below
/// `tol`; `x = 1` is rejected.
pub fn euler_transform_sum(
    h: &dyn Fn(u64) -> Float,
    x: &Float,
    k: usize,
    tol: &Float,
    max_terms: u64,
) -> Result<Float> {
    if *x == 1 {
        return Err(Error::InvalidArgument("Euler transform needs x != 1".into()));
    }
    let bits = x.prec().max(tol.prec());
    let one_minus_x = Float::with_val(bits, 1u32 - x);
    let mut window: Vec<Float> = (0..=k as u64).map(h).collect();

    // head: Δ^r h(0) for r < K
    let mut head = Float::new(bits);
    let mut diffs = window.clone();
    let mut x_pow = Float::with_val(bits, 1);
    let mut denom = one_minus_x.clone();
    for _ in 0..k {
        head += Float::with_val(bits, &x_pow * &diffs[0]) / &denom;
        for i in 0..diffs.len() - 1 {
            diffs[i] = Float::with_val(bits, &diffs[i + 1] - &diffs[i]);
        }
        diffs.pop();
        x_pow *= x;
        denom *= &one_minus_x;
    }
    let prefactor = Float::with_val(bits, &x_pow / Float::with_val(bits, &denom / &one_minus_x));

    let binom: Vec<Integer> = (0..=k as u32).map(|i| Integer::from(Integer::binomial_u(k as u32, i))).collect();
    let kth_difference = |w: &[Float]| {
        let mut acc = Float::new(bits);
        for (i, v) in w.iter().enumerate() {
            let t = Float::with_val(bits, v * &binom[i]);
            if (k - i).is_multiple_of(2) {
                acc += t;
            } else {
                acc -= t;
            }
        }
        acc
    };

    let mut tail = Float::new(bits);
    let mut xn = Float::with_val(bits, 1);
    let mut quiet = 0usize;
    for n in 0..max_terms {
        let term = Float::with_val(bits, &xn * kth_difference(&window));
        let small = Float::with_val(bits, term.abs_ref()) < *tol;
        tail += term;
        quiet = if small { quiet + 1 } else { 0 };
        if quiet > k + 1 {
            return Ok(head + prefactor * tail);
        }
        xn *= x;
        window.remove(0);
        window.push(h(n + k as u64 + 1));
    }
    Err(Error::NoConvergence(max_terms))
}

/// Coefficients of the Euler polynomial `E_n` in ascending powers of `x`,
/// from `E_n(x) = x^n - ½ Σ_{k<n} C(n,k) E_k(x)`.
pub fn euler_polynomial_coeffs(n: u32) -> Vec<Rational> {
    let mut polys: Vec<Vec<Rational>> = Vec::with_capacity(n as usize + 1);
    for m in 0..=n {
        let mut p = vec![Rational::new(); m as usize + 1];
        p[m as usize] = Rational::from(1);
        for (k, prev) in polys.iter().enumerate() {
            let c = Rational::from((Integer::from(Integer::binomial_u(m, k as u32)), 2));
            for (i, coeff) in prev.iter().enumerate() {
                p[i] -= Rational::from(&c * coeff);
            }
        }
        polys.push(p);
    }
    polys.pop().unwrap()
}

pub fn euler_polynomial(n: u32, x: &Float) -> Float {
    let bits = x.prec();
    let mut acc = Float::new(bits);
    for c in euler_polynomial_coeffs(n).iter().rev() {
        acc *= x;
        acc += c;
    }
    acc
}

/// `H_n(0) = (-1)^{n/2} n!/(n/2)!` for even `n`, zero for odd `n`.
pub fn hermite_number(n: u32) -> Integer {
    if n % 2 == 1 {
        return Integer::new();
    }
    let v = Integer::from(Integer::factorial(n)) / Integer::from(Integer::factorial(n / 2));
    if (n / 2) % 2 == 1 {
        -v
    } else {
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prec() -> Precision {
        Precision::default()
    }

    fn abs_diff(a: &Float, b: &Float) -> f64 {
        Float::with_val(a.prec().max(b.prec()), a - b).abs().to_f64()
    }

    #[test]
    fn direct_examples() {
        let p = prec();
        let ft = FalseTheta::new(p);
        let tol = p.float(1e-30);
        let v = ft.t_direct(&FalseThetaParams::real(p, 1.0, 0.0, 5.0).unwrap(), &tol).unwrap();
        let expected = p.float(-5).exp() - p.float(-20).exp() + p.float(-45).exp();
        assert!(abs_diff(v.real(), &expected) < 1e-29);
        assert!(v.imag().is_zero());

        let v = ft.t_direct(&FalseThetaParams::real(p, 1.0, 1000.0, 1.0).unwrap(), &tol).unwrap();
        let lead = p.float(-1001).exp();
        let rel = (Float::with_val(p.bits(), v.real() - &lead) / &lead).abs();
        assert!(rel < Float::with_val(p.bits(), Float::i_exp(1, -1300)));

        let v = ft.t_direct(&FalseThetaParams::real(p, 1.0, 0.0, 0.01).unwrap(), &tol).unwrap();
        assert!((v.real().to_f64() - 0.5).abs() < 1e-3);
    }

    #[test]
    fn max_terms_is_enforced() {
        let p = prec();
        let ft = FalseTheta::new(p).with_max_terms(10);
        let tol = p.route_tolerance();
        let params = FalseThetaParams::real(p, 1.0, 0.0, 1e-3).unwrap();
        assert!(matches!(ft.t_direct(&params, &tol), Err(Error::NoConvergence(10))));
    }

    #[test]
    fn parameters_are_validated() {
        let p = prec();
        assert!(FalseThetaParams::real(p, 0.0, 1.0, 1.0).is_err());
        assert!(FalseThetaParams::real(p, 1.0, 1.0, 0.0).is_err());
        let off_sector = FalseThetaParams::new(p.float(1), p.float(0), p.complex((0.01, 0.02))).unwrap();
        assert!(FalseTheta::new(p).t_uniform(0, &off_sector, 2).is_err());
    }

    #[test]
    fn partial_sums_bracket_the_limit() {
        let p = prec();
        let ft = FalseTheta::new(p);
        for (a, b, z) in [(1.0, 0.0, 0.05), (0.5, 3.0, 0.2), (1.5, 0.0, 1.0)] {
            let params = FalseThetaParams::real(p, a, b, z).unwrap();
            let limit = ft.t_direct(&params, &p.route_tolerance()).unwrap().real().clone();
            let sums = ft.partial_sums(&params, 30).unwrap();
            for w in sums.windows(2) {
                if abs_diff(&w[0], &w[1]) < 1e-45 {
                    break;
                }
                let lo = w[0].clone().min(&w[1]);
                let hi = w[0].clone().max(&w[1]);
                assert!(lo <= limit && limit <= hi);
            }
        }
    }

    #[test]
    fn euler_transform_examples() {
        let p = prec();
        let tol = p.route_tolerance();
        let half = p.float(0.5);
        let one = |_n: u64| p.float(1);
        assert_eq!(euler_transform_sum(&one, &half, 1, &tol, 100).unwrap(), 2);
        let ident = |n: u64| p.float(n);
        assert_eq!(euler_transform_sum(&ident, &half, 2, &tol, 100).unwrap(), 2);
        assert!(euler_transform_sum(&one, &p.float(1), 2, &tol, 100).is_err());
    }

    #[test]
    fn euler_route_matches_direct() {
        let p = prec();
        let ft = FalseTheta::new(p);
        let params = FalseThetaParams::real(p, 1.0, 1.0, 0.1).unwrap();
        let direct = ft.t_direct(&params, &Float::with_val(p.bits(), Float::i_exp(1, -240))).unwrap();
        let euler = ft.t_euler(&params).unwrap();
        assert!(abs_diff(direct.real(), &euler) <= p.route_tolerance().to_f64());
    }

    #[test]
    fn uniform_expansion_small_z() {
        let p = prec();
        let ft = FalseTheta::new(p);
        let tol = p.route_tolerance();
        let params = FalseThetaParams::real(p, 1.0, 0.0, 1e-4).unwrap();
        let direct = ft.t_direct(&params, &tol).unwrap();
        let uni = ft.t_uniform(0, &params, 3).unwrap();
        assert!(abs_diff(direct.real(), uni.real()) <= 1e-12);

        let params = FalseThetaParams::real(p, 1.0, 0.0, 1e-3).unwrap();
        let direct = ft.t_direct_weighted(1, &params, &tol).unwrap();
        let uni = ft.t_uniform(1, &params, 2).unwrap();
        let rel = abs_diff(direct.real(), uni.real()) / direct.real().to_f64().abs();
        assert!(rel <= 1e-5, "rel = {rel}");
    }

    #[test]
    fn uniform_expansion_large_b_decays() {
        let p = prec();
        let ft = FalseTheta::new(p);
        let v = ft.t_uniform(0, &FalseThetaParams::real(p, 1.0, 1e5, 0.01).unwrap(), 3).unwrap();
        assert!(v.real().clone().abs() < Float::with_val(p.bits(), Float::i_exp(1, -1300)));
    }

    #[test]
    fn uniform_expansion_complex_z() {
        let p = prec();
        let ft = FalseTheta::new(p);
        let params = FalseThetaParams::new(p.float(1), p.float(2), p.complex((1e-3, 5e-4))).unwrap();
        let direct = ft.t_direct(&params, &p.route_tolerance()).unwrap();
        let uni = ft.t_uniform(0, &params, 4).unwrap();
        let diff = Complex::with_val(p.bits(), &direct - &uni).abs().real().to_f64();
        assert!(diff < 1e-10, "diff = {diff}");
    }

    #[test]
    fn order_too_high() {
        let p = prec();
        let ft = FalseTheta::new(p);
        let params = FalseThetaParams::real(p, 1.0, 0.0, 0.1).unwrap();
        assert!(matches!(ft.t_uniform(1, &params, 20), Err(Error::OrderTooHigh { .. })));
        assert!(matches!(
            ft.t_z_derivative_asym(15, &p.float(0), &params, 7),
            Err(Error::OrderTooHigh { .. })
        ));
    }

    #[test]
    fn p_kj_low_order() {
        let p = prec();
        let bits = p.bits();
        let (mu, a, b) = (p.float(0.7), p.float(1.3), p.float(2.9));
        let c = p_kj_coefficients(0, 1, &mu, &a, &b, bits);
        assert_eq!(c.len(), 3);
        assert!(c[0].is_zero());
        assert!(abs_diff(&c[1], &Float::with_val(bits, &mu + &b)) < 1e-50);
        assert!(abs_diff(&c[2], &Float::with_val(bits, -&a)) < 1e-50);
        let c = p_kj_coefficients(0, 0, &mu, &a, &b, bits);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0], 1);
    }

    fn central_difference(ft: &FalseTheta, order: u32, a: f64, b: f64, z: f64, h: f64) -> f64 {
        let p = ft.precision();
        let t = |zz: f64| {
            ft.t_direct(&FalseThetaParams::real(p, a, b, zz).unwrap(), &p.route_tolerance())
                .unwrap()
                .real()
                .clone()
        };
        match order {
            1 => Float::with_val(p.bits(), (t(z + h) - t(z - h)) / (2.0 * h)).to_f64(),
            2 => Float::with_val(p.bits(), (t(z + h) - 2 * t(z) + t(z - h)) / (h * h)).to_f64(),
            _ => unreachable!(),
        }
    }

    #[test]
    fn z_derivative_matches_finite_difference() {
        let p = prec();
        let ft = FalseTheta::new(p);
        // T_{1,0} is 1/2 to all orders near 0, so this case is checked absolutely
        let params = FalseThetaParams::real(p, 1.0, 0.0, 1e-3).unwrap();
        let asym = ft.t_z_derivative_asym(1, &p.float(0), &params, 2).unwrap().to_f64();
        let fd = central_difference(&ft, 1, 1.0, 0.0, 1e-3, 1e-6);
        assert!((asym - fd).abs() < 1e-3, "asym {asym} fd {fd}");

        for (j, mu, b) in [(1u32, 0.3, 20.0), (1, -1.0, 60.0), (2, 0.5, 20.0)] {
            let params = FalseThetaParams::real(p, 1.0, b, 1e-3).unwrap();
            let asym = ft.t_z_derivative_asym(j, &p.float(mu), &params, 3).unwrap().to_f64();
            let fd = central_difference(&ft, j, 1.0, b + mu, 1e-3, 1e-6);
            let rel = (asym - fd).abs() / fd.abs();
            assert!(rel <= 1e-3, "J={j} mu={mu} b={b}: asym {asym} fd {fd}");
        }
    }

    #[test]
    fn euler_and_hermite_numbers() {
        assert_eq!(hermite_number(0), 1);
        assert_eq!(hermite_number(1), 0);
        assert_eq!(hermite_number(2), -2);
        assert_eq!(hermite_number(4), 12);
        assert_eq!(hermite_number(7), 0);
        let e1 = euler_polynomial_coeffs(1);
        assert_eq!(e1, vec![Rational::from((-1, 2)), Rational::from(1)]);
        let e2 = euler_polynomial_coeffs(2);
        assert_eq!(e2, vec![Rational::new(), Rational::from(-1), Rational::from(1)]);
        let e3 = euler_polynomial_coeffs(3);
        assert_eq!(
            e3,
            vec![Rational::from((1, 4)), Rational::new(), Rational::from((-3, 2)), Rational::from(1)]
        );
        let p = prec();
        assert_eq!(euler_polynomial(1, &p.float(0)), -0.5);
    }

    #[test]
    fn euler_polynomial_expansion() {
        let p = prec();
        let ft = FalseTheta::new(p);
        let v = ft.t_euler_poly_expansion(&p.float(1), &p.float(0), &p.float(1e-12), 2);
        assert!((v.to_f64() - 1.0).abs() < 1e-12);

        let (a, b, z) = (1.0, 1.0, 1e-4);
        let t = ft
            .t_direct(&FalseThetaParams::real(p, a, b, z).unwrap(), &p.route_tolerance())
            .unwrap()
            .real()
            .clone();
        let target = Float::with_val(p.bits(), 2 * p.float(-b * b * z / (4.0 * a)).exp() * (1u32 - t));
        let approx = ft.t_euler_poly_expansion(&p.float(a), &p.float(b), &p.float(z), 6);
        assert!(abs_diff(&target, &approx) <= 1e-8);
    }
}
