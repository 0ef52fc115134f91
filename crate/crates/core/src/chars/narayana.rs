//! Super-Narayana polynomials, Schröder paths and the Narayana polynomials.

use super::paths::schroder_paths;
use super::signed::{
    sign_vectors, signed_maj, signed_parking_functions, signed_shifted_shuffle, SignedParkingFunction,
};
use crate::combinat::word::standardize;
use crate::combinat::{ndpfs, parking_functions, permutations, shifted_shuffle, Letter, Permutation};
use crate::error::{Error, Result};
use crate::exact::{Monomial, Ring, TruncSeries, Var};
use crate::lagrange::solve_g;
use crate::symfun::VirtualAlphabet;
use crate::{QPoly, Rational};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

pub(crate) fn var(v: Var) -> QPoly {
    QPoly::var(v)
}

pub(crate) fn constant(c: i64) -> QPoly {
    QPoly::constant(Rational::from_int(c))
}

/// `Σ c · t^i q^j` from a table of counts.
fn from_counts(counts: &BTreeMap<(u32, u32), i64>) -> QPoly {
    counts.iter().fold(QPoly::zero(), |acc, (&(i, j), &c)| {
        acc + QPoly::monomial(Rational::from_int(c), Monomial::var(Var::T, i).with_exp(Var::Q, j))
    })
}

/// `(q)_n = (1 − q)(1 − q²)⋯(1 − qⁿ)`.
pub fn q_pochhammer(n: usize) -> QPoly {
    (1..=n as u32).fold(QPoly::one(), |acc, k| acc * (QPoly::one() - var(Var::Q).pow(k)))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SignedStatistic {
    Sinv,
    Smaj,
}

/// `Σ t^{m(ε)} q^{stat}` over the signed parking functions of length `n`.
pub fn super_narayana_count(n: usize, stat: SignedStatistic) -> QPoly {
    let mut counts = BTreeMap::new();
    for a in parking_functions(n) {
        let letters = a.letters();
        for minus in sign_vectors(n) {
            let v: Vec<i64> =
                letters.iter().zip(&minus).map(|(&x, &m)| if m { -(x as i64) } else { x as i64 }).collect();
            let greater = |i: usize, j: usize| v[i] > v[j] || (v[i] == v[j] && v[i] < 0);
            let s = match stat {
                SignedStatistic::Sinv => (0..n).map(|i| (i + 1..n).filter(|&j| greater(i, j)).count()).sum(),
                SignedStatistic::Smaj => (1..n).filter(|&i| greater(i - 1, i)).sum::<usize>(),
            };
            let m = minus.iter().filter(|&&b| b).count();
            *counts.entry((m as u32, s as u32)).or_insert(0) += 1;
        }
    }
    from_counts(&counts)
}

/// `(q)_n · g_n((1 − x)/(1 − q))` at `x = −t`.
pub fn super_narayana_sym(n: usize) -> Result<QPoly> {
    let g = solve_g::<Rational>(n)?;
    let gn = g.component(n).expect("solved through degree n");
    let value = VirtualAlphabet::OneMinusXOverOneMinusQ.evaluate(gn)?.mul_poly(&q_pochhammer(n));
    Ok(value.assert_polynomial()?.substitute(Var::X, &-var(Var::T)))
}

/// `Σ_ε (−x)^{m(ε)} q^{maj(σ, ε)}`, i.e. `(q)_n F_σ(|(1 − x)/(1 − q))`.
pub fn qt_f(sigma: &[Letter]) -> QPoly {
    let n = sigma.len();
    let mut out = QPoly::zero();
    for minus in sign_vectors(n) {
        let m = minus.iter().filter(|&&b| b).count() as u32;
        let sign = if m % 2 == 0 { 1 } else { -1 };
        let maj = signed_maj(sigma, &minus) as u32;
        out = out + QPoly::monomial(Rational::from_int(sign), Monomial::var(Var::X, m).with_exp(Var::Q, maj));
    }
    out
}

/// For `σ`: signed descents of every `(a, ε)` with `std(a) = σ` are those of
/// `(σ, ε)`, and `F ↦ qt_f/(q)_n` is multiplicative on `F_σ F_τ` for every `τ`
/// with `|σ| + |τ| ≤ 5`.
pub fn qt_f_identity_check(sigma: &Permutation) -> bool {
    let n = sigma.len();
    for a in parking_functions(n) {
        if standardize(a.letters()) != sigma.letters() {
            continue;
        }
        for minus in sign_vectors(n) {
            let w = SignedParkingFunction::new(a.clone(), minus.clone()).expect("lengths agree");
            if w.stats().smaj != signed_maj(sigma.letters(), &minus) {
                return false;
            }
        }
    }
    let lhs_sigma = qt_f(sigma.letters());
    for m in 0..=5usize.saturating_sub(n) {
        for tau in permutations(m) {
            let shuffled = shifted_shuffle(sigma.letters(), tau.letters(), n as Letter);
            let sum = shuffled.iter().fold(QPoly::zero(), |acc, g| acc + qt_f(g));
            let lhs = &(&lhs_sigma * &qt_f(tau.letters())) * &q_pochhammer(n + m);
            let rhs = &(&q_pochhammer(n) * &q_pochhammer(m)) * &sum;
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// `(−x)^{m(ε)} q^{stat}` for one signed word.
fn phi_numerator(w: &SignedParkingFunction, stat: SignedStatistic) -> QPoly {
    let st = w.stats();
    let s = match stat {
        SignedStatistic::Sinv => st.sinv,
        SignedStatistic::Smaj => st.smaj,
    };
    let sign = if st.minus_count % 2 == 0 { 1 } else { -1 };
    QPoly::monomial(Rational::from_int(sign), Monomial::var(Var::X, st.minus_count as u32).with_exp(Var::Q, s as u32))
}

/// Signed basis pairs `(u, v)` of sizes `k`, `l` on which `φ_{q,x}` built on
/// `stat` fails to be multiplicative.
pub fn phi_failures(k: usize, l: usize, stat: SignedStatistic) -> usize {
    let (pk, pl, pt) = (q_pochhammer(k), q_pochhammer(l), q_pochhammer(k + l));
    let right = signed_parking_functions(l);
    let mut failures = 0;
    for u in signed_parking_functions(k) {
        for v in &right {
            let sum = signed_shifted_shuffle(&u, v).iter().fold(QPoly::zero(), |acc, w| acc + phi_numerator(w, stat));
            let lhs = &(&sum * &pk) * &pl;
            let rhs = &(&phi_numerator(&u, stat) * &phi_numerator(v, stat)) * &pt;
            failures += usize::from(lhs != rhs);
        }
    }
    failures
}

/// Checks, through total degree `n`:
/// `s` is multiplicative on `F_a F_b`; `φ_{q,x}` built on `smaj` is
/// multiplicative on signed basis pairs; `(q)_n φ_{q,x} ∘ s(G_n)` is the
/// super-Narayana polynomial at `t = −x`; `sinv` and `smaj` are equidistributed.
pub fn s_character_check(n: usize) -> Result<bool> {
    for total in 2..=n {
        for k in 1..total {
            for a in parking_functions(k) {
                for b in parking_functions(total - k) {
                    let mut lhs: Vec<SignedParkingFunction> = Vec::new();
                    for ea in sign_vectors(k) {
                        for eb in sign_vectors(total - k) {
                            let u = SignedParkingFunction::new(a.clone(), ea.clone())?;
                            let v = SignedParkingFunction::new(b.clone(), eb)?;
                            lhs.extend(signed_shifted_shuffle(&u, &v));
                        }
                    }
                    let mut rhs = Vec::new();
                    for c in shifted_shuffle(a.letters(), b.letters(), k as Letter) {
                        for e in sign_vectors(total) {
                            rhs.push(SignedParkingFunction::new(crate::combinat::ParkingFunction::new(c.clone())?, e)?);
                        }
                    }
                    lhs.sort();
                    rhs.sort();
                    if lhs != rhs {
                        return Ok(false);
                    }
                }
            }
            if phi_failures(k, total - k, SignedStatistic::Smaj) > 0 {
                return Ok(false);
            }
        }
    }
    for m in 0..=n {
        let by_sinv = super_narayana_count(m, SignedStatistic::Sinv);
        let by_smaj = super_narayana_count(m, SignedStatistic::Smaj);
        if by_sinv != by_smaj {
            return Ok(false);
        }
        let phi_s = signed_parking_functions(m).iter().fold(QPoly::zero(), |acc, w| acc + phi_numerator(w, SignedStatistic::Smaj));
        if phi_s.substitute(Var::X, &-var(Var::T)) != super_narayana_sym(m)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The three routes to `P_n(t) = P_n(t, 0)`.
#[derive(Clone, PartialEq, Debug)]
pub struct SchroderPolynomials {
    /// Schröder paths of semi-length `n` by horizontal steps.
    pub by_paths: QPoly,
    /// Signed parking functions without signed inversions, by minus signs.
    pub by_signed_words: QPoly,
    /// `[zⁿ] (1 − tz − √((1 − tz)² − 4z))/(2z)`.
    pub by_series: QPoly,
}

impl SchroderPolynomials {
    pub fn agree(&self) -> bool {
        self.by_paths == self.by_signed_words && self.by_paths == self.by_series
    }
}

fn univariate_t(coeffs: &[i64]) -> QPoly {
    QPoly::univariate(Var::T, &coeffs.iter().map(|&c| Rational::from_int(c)).collect::<Vec<_>>())
}

/// Sorted signed parking functions: for each nondecreasing parking function,
/// one copy of any subset of its distinct letters is barred and moved to the front.
pub fn uninverted_signed_words(n: usize) -> Vec<SignedParkingFunction> {
    let mut out = Vec::new();
    for pi in ndpfs(n) {
        let mut distinct = pi.letters().to_vec();
        distinct.dedup();
        for mask in 0u32..1 << distinct.len() {
            let mut values: Vec<i64> = Vec::with_capacity(n);
            let mut barred = vec![false; distinct.len()];
            for &a in pi.letters() {
                let d = distinct.iter().position(|&x| x == a).expect("letter is present");
                if mask >> d & 1 == 1 && !barred[d] {
                    barred[d] = true;
                    values.push(-(a as i64));
                } else {
                    values.push(a as i64);
                }
            }
            values.sort_unstable();
            out.push(SignedParkingFunction::from_values(&values).expect("rearranged parking function"));
        }
    }
    out
}

/// `P_n(t) = [zⁿ] (1 − tz − √((1 − tz)² − 4z)) / (2z)`.
pub fn schroder_series(order: usize) -> Result<Vec<QPoly>> {
    let t = var(Var::T);
    // (1 − tz)² − 4z = 1 − (2t + 4) z + t² z².
    let radicand = vec![QPoly::one(), -(&(&t * &constant(2)) + &constant(4)), &t * &t];
    let root = TruncSeries::new(radicand, order + 1).sqrt()?;
    let numerator: Vec<QPoly> = (0..=order + 1)
        .map(|k| {
            let lead = match k {
                0 => QPoly::one(),
                1 => -t.clone(),
                _ => QPoly::zero(),
            };
            lead - root.coeff(k)
        })
        .collect();
    if !numerator[0].is_zero() {
        return Err(Error::InvariantViolation("numerator has a constant term".into()));
    }
    numerator[1..]
        .iter()
        .map(|c| c.div_int(2).ok_or_else(|| Error::InvariantViolation("odd coefficient".into())))
        .collect()
}

pub fn schroder_polynomials(n: usize) -> Result<SchroderPolynomials> {
    let mut by_h = vec![0i64; n + 1];
    for p in schroder_paths(n) {
        by_h[p.horizontal_count()] += 1;
    }
    let mut by_minus = vec![0i64; n + 1];
    for w in uninverted_signed_words(n) {
        by_minus[w.minus_count()] += 1;
    }
    Ok(SchroderPolynomials {
        by_paths: univariate_t(&by_h),
        by_signed_words: univariate_t(&by_minus),
        by_series: schroder_series(n)?.swap_remove(n),
    })
}

/// `c_n(t) = P_n(t − 1)/t`, `n ≥ 1`.
pub fn narayana_from_schroder(p_n: &QPoly) -> Result<QPoly> {
    let shifted = p_n.substitute(Var::T, &(var(Var::T) - QPoly::one()));
    shifted.div_exact(&var(Var::T)).ok_or_else(|| Error::InvariantViolation(format!("t does not divide {shifted}")))
}

/// Narayana polynomial `c_n(q)` from `q c_n(q) = h_n((n+1)q)/(n+1)` read on the
/// alphabet `(n+1)(1 − x)` with `x = 1 − q`.
pub fn lassalle_narayana(n: usize) -> Result<QPoly> {
    let m = n as i64 + 1;
    let h = VirtualAlphabet::MTimesOneMinusX(m).complete(n as u32).swap_remove(n).assert_polynomial()?;
    let h = h.div_int(m).ok_or_else(|| Error::InvariantViolation(format!("{m} does not divide h_{n}")))?;
    let in_q = h.substitute(Var::X, &(QPoly::one() - var(Var::Q)));
    in_q.div_exact(&var(Var::Q)).ok_or_else(|| Error::InvariantViolation(format!("q does not divide {in_q}")))
}

/// Coefficients of `P_n(t)` for `n = 0..=n_max`.
pub fn schroder_triangle(n_max: usize) -> Result<Vec<Vec<Rational>>> {
    let series = schroder_series(n_max)?;
    let mut rows = vec![vec![Rational::one()]];
    for p in &series[1..] {
        rows.push(p.univariate_coeffs(Var::T).unwrap_or_default());
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::paths::{schroder_encode, schroder_sort};

    fn poly(terms: &[(u32, u32, i64)]) -> QPoly {
        let mut counts = BTreeMap::new();
        for &(i, j, c) in terms {
            counts.insert((i, j), c);
        }
        from_counts(&counts)
    }

    #[test]
    fn super_narayana_small() {
        let p2 = poly(&[(2, 0, 1), (2, 1, 2), (1, 0, 3), (1, 1, 3), (0, 0, 2), (0, 1, 1)]);
        assert_eq!(super_narayana_count(2, SignedStatistic::Sinv), p2);
        assert_eq!(super_narayana_count(2, SignedStatistic::Smaj), p2);
        assert_eq!(super_narayana_sym(2).unwrap(), p2);
        let p3 = poly(&[
            (3, 0, 1), (3, 1, 5), (3, 2, 5), (3, 3, 5),
            (2, 0, 6), (2, 1, 16), (2, 2, 16), (2, 3, 10),
            (1, 0, 10), (1, 1, 16), (1, 2, 16), (1, 3, 6),
            (0, 0, 5), (0, 1, 5), (0, 2, 5), (0, 3, 1),
        ]);
        assert_eq!(super_narayana_count(3, SignedStatistic::Sinv), p3);
        assert_eq!(super_narayana_sym(3).unwrap(), p3);
        assert_eq!(super_narayana_sym(0).unwrap(), QPoly::one());
        assert_eq!(super_narayana_count(1, SignedStatistic::Sinv), poly(&[(1, 0, 1), (0, 0, 1)]));
    }

    #[test]
    fn super_narayana_routes_agree() {
        for n in 4..=5 {
            let count = super_narayana_count(n, SignedStatistic::Sinv);
            assert_eq!(count, super_narayana_count(n, SignedStatistic::Smaj));
            assert_eq!(count, super_narayana_sym(n).unwrap());
            let at_q0 = count.substitute(Var::Q, &QPoly::zero());
            assert_eq!(at_q0, schroder_polynomials(n).unwrap().by_signed_words);
        }
    }

    #[test]
    fn qt_f_small() {
        let x = var(Var::X);
        assert_eq!(qt_f(&[1]), QPoly::one() - x);
        assert_ne!(qt_f(&[1, 2]), qt_f(&[2, 1]));
        for n in 1..=3 {
            for sigma in permutations(n) {
                assert!(qt_f_identity_check(&sigma), "{sigma}");
            }
        }
    }

    #[test]
    fn s_is_a_character() {
        assert!(s_character_check(4).unwrap());
        // With sinv in place of smaj the map is not multiplicative: 1 · 1,1̄.
        assert!(phi_failures(1, 2, SignedStatistic::Sinv) > 0);
        assert_eq!(phi_failures(2, 2, SignedStatistic::Smaj), 0);
    }

    #[test]
    fn schroder_rows() {
        let rows: [&[i64]; 4] = [&[1], &[1, 1], &[2, 3, 1], &[5, 10, 6, 1]];
        for (n, row) in rows.iter().enumerate() {
            let p = schroder_polynomials(n).unwrap();
            assert!(p.agree(), "{p:?}");
            assert_eq!(p.by_paths, univariate_t(row));
        }
        for n in 4..=7 {
            assert!(schroder_polynomials(n).unwrap().agree());
        }
        let c3 = narayana_from_schroder(&univariate_t(&[5, 10, 6, 1])).unwrap();
        assert_eq!(c3, univariate_t(&[1, 3, 1]));
    }

    #[test]
    fn uninverted_words_by_brute_force() {
        for n in 0..=5 {
            let mut brute: Vec<SignedParkingFunction> =
                signed_parking_functions(n).into_iter().filter(|w| w.stats().sinv == 0).collect();
            let mut fast = uninverted_signed_words(n);
            brute.sort();
            fast.sort();
            assert_eq!(brute, fast);
            let mut sorted_paths: Vec<_> = schroder_paths(n).iter().map(|p| schroder_sort(&schroder_encode(p))).collect();
            sorted_paths.sort();
            assert_eq!(sorted_paths, fast);
        }
    }

    #[test]
    fn lassalle() {
        let q = |c: &[i64]| QPoly::univariate(Var::Q, &c.iter().map(|&x| Rational::from_int(x)).collect::<Vec<_>>());
        assert_eq!(lassalle_narayana(1).unwrap(), QPoly::one());
        assert_eq!(lassalle_narayana(3).unwrap(), q(&[1, 3, 1]));
        for n in 1..=7 {
            let c = narayana_from_schroder(&schroder_polynomials(n).unwrap().by_series).unwrap();
            assert_eq!(lassalle_narayana(n).unwrap(), c.substitute(Var::T, &var(Var::Q)));
        }
    }
}
