//! Symmetric tridiagonal eigenproblems: Sturm bisection, inverse iteration, implicit QL.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct SymTridiagonal {
    diag: Vec<f64>,
    off: Vec<f64>,
}

/// One eigenpair with its discrete residual `‖Tv - λv‖/‖v‖`.
#[derive(Clone, Debug)]
pub struct EigenPair {
    pub value: f64,
    pub vector: Vec<f64>,
    pub residual: f64,
}

impl SymTridiagonal {
    /// `off[i]` couples rows `i` and `i+1`.
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::invalid("empty tridiagonal matrix"));
        }
        if off.len() + 1 != diag.len() {
            return Err(Error::invalid(format!(
                "off-diagonal has length {}, expected {}",
                off.len(),
                diag.len() - 1
            )));
        }
        if diag.iter().chain(off.iter()).any(|v| !v.is_finite()) {
            return Err(Error::invalid("non-finite matrix entry"));
        }
        Ok(SymTridiagonal { diag, off })
    }

    pub fn from_diagonal(diag: Vec<f64>) -> Result<Self> {
        let n = diag.len();
        Self::new(diag, vec![0.0; n.saturating_sub(1)])
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn off(&self) -> &[f64] {
        &self.off
    }

    pub fn max_abs_diag(&self) -> f64 {
        self.diag.iter().fold(0.0, |m, d| m.max(d.abs()))
    }

    /// Gershgorin interval containing every eigenvalue.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.dim();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let r = if i > 0 { self.off[i - 1].abs() } else { 0.0 }
                + if i + 1 < n { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - r);
            hi = hi.max(self.diag[i] + r);
        }
        (lo, hi)
    }

    fn norm_bound(&self) -> f64 {
        let (lo, hi) = self.gershgorin();
        lo.abs().max(hi.abs()).max(f64::MIN_POSITIVE)
    }

    pub fn matvec(&self, v: &[f64]) -> Vec<f64> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let mut s = self.diag[i] * v[i];
                if i > 0 {
                    s += self.off[i - 1] * v[i - 1];
                }
                if i + 1 < n {
                    s += self.off[i] * v[i + 1];
                }
                s
            })
            .collect()
    }

    /// Number of eigenvalues strictly below `x`.
    pub fn sturm_count(&self, x: f64) -> usize {
        let pivmin = f64::MIN_POSITIVE.sqrt() * self.norm_bound().max(1.0);
        let mut count = 0;
        let mut q = 1.0;
        for i in 0..self.dim() {
            let coupling = if i > 0 {
                self.off[i - 1] * self.off[i - 1] / q
            } else {
                0.0
            };
            q = self.diag[i] - x - coupling;
            if q.abs() < pivmin {
                q = if q < 0.0 { -pivmin } else { pivmin };
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// The `k`-th smallest eigenvalue (0-based) by bisection to full precision.
    pub fn eigenvalue_bisect(&self, k: usize) -> Result<f64> {
        if k >= self.dim() {
            return Err(Error::invalid(format!(
                "eigenvalue index {k} out of range for dimension {}",
                self.dim()
            )));
        }
        let (mut lo, mut hi) = self.gershgorin();
        let slack = 2.0 * f64::EPSILON * self.norm_bound();
        lo -= slack;
        hi += slack;
        // invariant: count(lo) <= k < count(hi); run until the bracket is one ulp wide
        let floor = f64::MIN_POSITIVE * self.norm_bound();
        loop {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi || hi - lo <= floor {
                return Ok(lo);
            }
            if self.sturm_count(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
    }

    /// All eigenvalues, ascending, by implicit QL with Wilkinson shifts.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        let n = self.dim();
        let mut d = self.diag.clone();
        let mut e = self.off.clone();
        e.push(0.0);
        for l in 0..n {
            let mut iter = 0;
            loop {
                let mut m = l;
                while m + 1 < n {
                    let dd = d[m].abs() + d[m + 1].abs();
                    if e[m].abs() <= f64::EPSILON * dd {
                        break;
                    }
                    m += 1;
                }
                if m == l {
                    break;
                }
                iter += 1;
                if iter > 60 {
                    return Err(Error::Eigensolver(format!(
                        "QL iteration did not converge for eigenvalue {l}"
                    )));
                }
                let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                let mut r = g.hypot(1.0);
                g = d[m] - d[l] + e[l] / (g + r.copysign(g));
                let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
                let mut deflated = false;
                let mut i = m;
                while i > l {
                    i -= 1;
                    let f = s * e[i];
                    let b = c * e[i];
                    r = f.hypot(g);
                    e[i + 1] = r;
                    if r == 0.0 {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        deflated = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if deflated {
                    continue;
                }
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        }
        d.sort_by(f64::total_cmp);
        Ok(d)
    }

    /// Eigenvector for an (accurate) eigenvalue by inverse iteration.
    ///
    /// `against` holds already-computed vectors of nearby eigenvalues; the
    /// iterate is kept orthogonal to them.
    pub fn inverse_iteration(&self, lambda: f64, against: &[&[f64]]) -> Result<Vec<f64>> {
        let n = self.dim();
        if n == 1 {
            return Ok(vec![1.0]);
        }
        let scale = self.norm_bound();
        let lu = ShiftedLu::new(self, lambda, f64::EPSILON * scale);
        // deterministic, generic start vector
        let mut v: Vec<f64> = (0..n)
            .map(|i| 1.0 + 0.5 * ((i as f64) * 0.618_033_988_749_895).fract())
            .collect();
        orthogonalize(&mut v, against);
        normalize(&mut v)?;
        let tol = 1e3 * f64::EPSILON * scale;
        let mut last_res = f64::INFINITY;
        for _ in 0..12 {
            let mut w = lu.solve(&v);
            orthogonalize(&mut w, against);
            normalize(&mut w)?;
            let res = residual_norm(self, lambda, &w);
            v = w;
            if res <= tol || res >= 0.9 * last_res && res <= 1e6 * tol {
                return Ok(v);
            }
            last_res = last_res.min(res);
        }
        let res = residual_norm(self, lambda, &v);
        if res <= 1e6 * tol {
            Ok(v)
        } else {
            Err(Error::Eigensolver(format!(
                "inverse iteration stagnated at eigenvalue {lambda} (residual {res:e})"
            )))
        }
    }

    /// The `count` smallest eigenpairs, ascending, with unit-norm vectors.
    pub fn eigen_lowest(&self, count: usize) -> Result<Vec<EigenPair>> {
        if count > self.dim() {
            return Err(Error::invalid(format!(
                "requested {count} eigenpairs from a {}x{} matrix",
                self.dim(),
                self.dim()
            )));
        }
        let cluster = 1e-9 * self.norm_bound();
        let mut out: Vec<EigenPair> = Vec::with_capacity(count);
        for k in 0..count {
            let value = self.eigenvalue_bisect(k)?;
            let near: Vec<&[f64]> = out
                .iter()
                .filter(|p| (p.value - value).abs() <= cluster)
                .map(|p| p.vector.as_slice())
                .collect();
            let vector = self.inverse_iteration(value, &near)?;
            let residual = residual_norm(self, value, &vector);
            out.push(EigenPair {
                value,
                vector,
                residual,
            });
        }
        Ok(out)
    }

    /// `⟨v, Tv⟩ / ⟨v, v⟩`.
    pub fn rayleigh_quotient(&self, v: &[f64]) -> Result<f64> {
        let vv = dot(v, v);
        if vv == 0.0 {
            return Err(Error::ZeroVector);
        }
        Ok(dot(v, &self.matvec(v)) / vv)
    }
}

/// `‖Tv - λv‖ / ‖v‖`.
pub fn residual_norm(t: &SymTridiagonal, lambda: f64, v: &[f64]) -> f64 {
    let tv = t.matvec(v);
    let r: f64 = tv
        .iter()
        .zip(v)
        .map(|(a, b)| (a - lambda * b).powi(2))
        .sum();
    (r / dot(v, v)).sqrt()
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalize(v: &mut [f64]) -> Result<()> {
    let n = dot(v, v).sqrt();
    if n == 0.0 || !n.is_finite() {
        return Err(Error::ZeroVector);
    }
    v.iter_mut().for_each(|x| *x /= n);
    Ok(())
}

fn orthogonalize(v: &mut [f64], against: &[&[f64]]) {
    for _ in 0..2 {
        for u in against {
            let c = dot(v, u);
            v.iter_mut().zip(u.iter()).for_each(|(x, y)| *x -= c * y);
        }
    }
}

/// LU factors of `T - σI` with partial pivoting.
struct ShiftedLu {
    // U has the main diagonal and two superdiagonals
    u0: Vec<f64>,
    u1: Vec<f64>,
    u2: Vec<f64>,
    mult: Vec<f64>,
    swapped: Vec<bool>,
}

impl ShiftedLu {
    fn new(t: &SymTridiagonal, sigma: f64, tiny: f64) -> Self {
        let n = t.dim();
        let mut u0 = vec![0.0; n];
        let mut u1 = vec![0.0; n];
        let mut u2 = vec![0.0; n];
        let mut mult = vec![0.0; n];
        let mut swapped = vec![false; n];
        // current row i holds (a, b, c) at columns i, i+1, i+2
        let mut a = t.diag[0] - sigma;
        let mut b = if n > 1 { t.off[0] } else { 0.0 };
        let mut c = 0.0;
        for i in 0..n {
            if i + 1 == n {
                u0[i] = if a.abs() < tiny { tiny } else { a };
                u1[i] = 0.0;
                u2[i] = 0.0;
                break;
            }
            let sub = t.off[i];
            let na = t.diag[i + 1] - sigma;
            let nb = if i + 2 < n { t.off[i + 1] } else { 0.0 };
            if sub.abs() > a.abs() {
                // pivot on the next row
                swapped[i] = true;
                u0[i] = sub;
                u1[i] = na;
                u2[i] = nb;
                let m = a / sub;
                mult[i] = m;
                a = b - m * na;
                b = c - m * nb;
                c = 0.0;
            } else {
                let piv = if a.abs() < tiny { tiny } else { a };
                u0[i] = piv;
                u1[i] = b;
                u2[i] = c;
                let m = sub / piv;
                mult[i] = m;
                a = na - m * b;
                b = nb - m * c;
                c = 0.0;
            }
        }
        ShiftedLu {
            u0,
            u1,
            u2,
            mult,
            swapped,
        }
    }

    fn solve(&self, rhs: &[f64]) -> Vec<f64> {
        let n = rhs.len();
        let mut y = rhs.to_vec();
        for i in 0..n.saturating_sub(1) {
            if self.swapped[i] {
                y.swap(i, i + 1);
            }
            y[i + 1] -= self.mult[i] * y[i];
        }
        let mut x = vec![0.0; n];
        for i in (0..n).rev() {
            let mut s = y[i];
            if i + 1 < n {
                s -= self.u1[i] * x[i + 1];
            }
            if i + 2 < n {
                s -= self.u2[i] * x[i + 2];
            }
            x[i] = s / self.u0[i];
        }
        x
    }
}
