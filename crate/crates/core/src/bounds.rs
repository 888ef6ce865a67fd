//! Closed-form bounds on `γ_rt` for cubic graphs and for the family
//! `P(ck,k)`, each tagged with the theorem it comes from.
//!
//! Fractional formulas are evaluated exactly and then rounded: explicit
//! floors and ceilings as written, everything else up (a valid integer upper
//! bound). A strict lower bound `x < γ` becomes `⌊x⌋ + 1`.

use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::PetersenParams;

type Q = Ratio<i64>;

fn q(num: u64, den: u64) -> Q {
    Q::new(num as i64, den as i64)
}

fn ceil(x: Q) -> u64 {
    x.ceil().to_integer() as u64
}

fn floor(x: Q) -> u64 {
    x.floor().to_integer() as u64
}

/// Where a bound comes from. [`Source::label`] gives the theorem label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Source {
    /// `⌈ℓ|V|/2d⌉` for `d`-regular graphs, `|V|` once `ℓ >= 2d`.
    RegularLowerBound,
    /// `γ_rt(P(n,k)) = tn/3` iff `n = 0 (mod 6)`, `k = 1,5 (mod 6)`, `t = 3,4,5`.
    ExtremalCharacterization,
    /// `tck/3 <= γ_rt(P(ck,k)) <= t(c+1)(k+1)/3 - t`, `t = 3,4,5`.
    PckkBounds,
    DominationBounds,
    DominationCharacterization,
    TwoRainbowBounds,
    TwoRainbowCharacterization,
    ThreeRainbowBounds,
    FourRainbowBounds,
    FiveRainbowBounds,
    /// Three-rainbow case table, `c = 0 (mod 6)`.
    ThreeRainbowCasesMultipleOfSix,
    /// Three-rainbow case table, `c` odd.
    ThreeRainbowCasesOdd,
    /// Three-rainbow case table, `c` even and `c != 0 (mod 6)`.
    ThreeRainbowCasesEven,
    FourRainbowCases,
    FiveRainbowCases,
    /// Literature values for the prisms `P(n,1)`.
    PrismExact,
    /// `γ_rt` is nondecreasing in `t`.
    MonotoneInT,
}

impl Source {
    pub fn label(self) -> &'static str {
        match self {
            Source::RegularLowerBound => "LBKuzman",
            Source::ExtremalCharacterization => "MainTheoremX2novi",
            Source::PckkBounds => "MainTheoremX1",
            Source::DominationBounds => "MainTheorem1",
            Source::DominationCharacterization => "DominationCharacterization",
            Source::TwoRainbowBounds => "MainTheorem2",
            Source::TwoRainbowCharacterization => "TwoRainbowCharacterization",
            Source::ThreeRainbowBounds => "MainTheorem3",
            Source::FourRainbowBounds => "MainTheorem4",
            Source::FiveRainbowBounds => "MainTheorem5",
            Source::ThreeRainbowCasesMultipleOfSix => "MainTheoremOLD",
            Source::ThreeRainbowCasesOdd => "MainTheorem2OLD",
            Source::ThreeRainbowCasesEven => "MainTheorem3OLD",
            Source::FourRainbowCases => "MainTheoremDETAILS4",
            Source::FiveRainbowCases => "MainTheoremDETAILS5",
            Source::PrismExact => "PrismExact",
            Source::MonotoneInT => "MonotoneInT",
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for Source {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// How to read the four-rainbow case table for `c = 0 (mod 6)`, whose two
/// non-exact rows carry the coefficient `5/3` where `4/3` is implied.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Formulas exactly as stated.
    AsPrinted,
    /// `4/3` in those rows, and bounds tightened across `t` by monotonicity.
    #[default]
    Corrected,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::AsPrinted => "as_printed",
            Mode::Corrected => "corrected",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "as_printed" | "as-printed" => Ok(Mode::AsPrinted),
            "corrected" => Ok(Mode::Corrected),
            _ => Err(Error::input(format!("unknown mode {s:?} (as_printed | corrected)"))),
        }
    }
}

/// Two incompatible readings of one statement; the report keeps both.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub note: String,
    pub readings: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub lower: u64,
    pub upper: u64,
    pub exact: Option<u64>,
    pub sources: Vec<Source>,
    pub mode: Mode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discrepancy: Option<Discrepancy>,
}

impl BoundReport {
    pub fn contains(&self, value: u64) -> bool {
        self.lower <= value && value <= self.upper
    }
}

/// `⌈t·|V| / 2d⌉` for `t < 2d`, `|V|` otherwise.
pub fn generic_lower_bound(n_vertices: u64, degree: u64, t: u64) -> u64 {
    assert!(degree >= 1, "degree must be positive");
    if t >= 2 * degree {
        n_vertices
    } else {
        ceil(q(t * n_vertices, 2 * degree))
    }
}

fn check_t_345(t: u64) -> Result<()> {
    if !(3..=5).contains(&t) {
        return Err(Error::domain(format!("characterization covers t in {{3,4,5}}, got t = {t}")));
    }
    Ok(())
}

fn extremal(n: u64, k: u64) -> bool {
    n.is_multiple_of(6) && matches!(k % 6, 1 | 5)
}

/// `n = 0 (mod 6)` and `k = 1, 5 (mod 6)`; then `γ_rt(P(n,k)) = tn/3`.
pub fn is_characterized_extremal(n: u64, k: u64, t: u64) -> Result<bool> {
    check_t_345(t)?;
    let p = PetersenParams::new(n as usize, k as usize)?;
    Ok(extremal(n, p.k() as u64))
}

/// `tn/3` on characterized instances.
pub fn characterized_exact(n: u64, k: u64, t: u64) -> Result<Option<u64>> {
    Ok(is_characterized_extremal(n, k, t)?.then_some(t * n / 3))
}

/// Literature values for prisms: `γ_r2(P(n,1)) = n` for `n >= 5` and
/// `γ_r3(P(n,1)) = n + α` for `n >= 6`, with `α = 0, 1, 2` for
/// `n ≡ 0`, `n ≡ 1,2,3,5`, `n ≡ 4 (mod 6)`.
pub fn known_exact_pn1(n: u64, t: u64) -> Option<u64> {
    match t {
        2 if n >= 5 => Some(n),
        3 if n >= 6 => Some(
            n + match n % 6 {
                0 => 0,
                4 => 2,
                _ => 1,
            },
        ),
        _ => None,
    }
}

/// `γ(P(n,k)) = n/2` iff `n = 0 (mod 4)` and `k` odd.
pub fn characterization_r1(n: u64, k: u64) -> bool {
    n.is_multiple_of(4) && k % 2 == 1
}

/// The two-rainbow characterization predicate as stated: `c = 0 (mod 5)`
/// and `k = 2, 8 (mod 10)`. Its value (`ck`) conflicts with the `4ck/5`
/// lower bound; see [`BoundReport::discrepancy`].
pub fn characterization_r2(c: u64, k: u64) -> bool {
    c.is_multiple_of(5) && matches!(k % 10, 2 | 8)
}

/// Upper value of the three-rainbow case tables for non-characterized
/// `(c, k)`, with the table it came from.
fn three_rainbow_case(c: u64, k: u64) -> (Q, Source) {
    let ck = q(c * k, 1);
    let int = |x: u64| q(x, 1);
    if c.is_multiple_of(6) {
        let v = if k.is_multiple_of(2) {
            int(c) * (int(k) + q(1, 2))
        } else {
            // k = 3 (mod 6); k = 1, 5 is characterized
            int(c * (k + 1))
        };
        (v, Source::ThreeRainbowCasesMultipleOfSix)
    } else if c % 2 == 1 {
        let v = match k % 6 {
            1 | 5 => ck + int(k.div_ceil(2)),
            0 | 2 | 4 => ck + int(c / 2) + q(k, 2),
            _ => int(c * (k + 1)) + int((k - 2).div_ceil(2)),
        };
        (v, Source::ThreeRainbowCasesOdd)
    } else {
        let v = match k % 6 {
            1 | 5 => ck + int(k + 1),
            0 | 2 | 4 => ck + q(c, 2) + int(k),
            _ => ck + int(c + k - 2),
        };
        (v, Source::ThreeRainbowCasesEven)
    }
}

struct Raw {
    lower: u64,
    upper: u64,
    exact: Option<u64>,
    sources: Vec<Source>,
    discrepancy: Option<Discrepancy>,
}

fn raw_bounds(c: u64, k: u64, t: u64, mode: Mode) -> Raw {
    let n = c * k;
    let order = 2 * n;
    let mut sources = vec![];
    let mut discrepancy = None;
    let mut exact = None;
    let (lower, upper);
    match t {
        1 => {
            sources.extend([Source::DominationBounds, Source::DominationCharacterization]);
            if characterization_r1(n, k) {
                exact = Some(n / 2);
                lower = n / 2;
                upper = n / 2;
            } else {
                lower = floor(q(n, 2)) + 1;
                upper = ceil(q((c + 1) * k, 2) + 1);
            }
        }
        2 => {
            sources.push(Source::TwoRainbowBounds);
            lower = ceil(q(4 * n, 5));
            let mut up = ceil(q(4 * (c + 1) * (k + 1), 5) + 1);
            if k == 1 {
                if let Some(v) = known_exact_pn1(n, 2) {
                    sources.push(Source::PrismExact);
                    exact = Some(v);
                    up = v;
                }
            }
            upper = up;
            if characterization_r2(c, k) {
                sources.push(Source::TwoRainbowCharacterization);
                discrepancy = Some(Discrepancy {
                    note: "characterization states the value ck, which differs from the lower bound 4ck/5 it is meant to attain"
                        .into(),
                    readings: vec![n, ceil(q(4 * n, 5))],
                });
            }
        }
        3..=5 => {
            sources.push(Source::RegularLowerBound);
            sources.push(Source::ExtremalCharacterization);
            sources.push(Source::PckkBounds);
            let general = match t {
                3 => Source::ThreeRainbowBounds,
                4 => Source::FourRainbowBounds,
                _ => Source::FiveRainbowBounds,
            };
            sources.push(general);
            if extremal(n, k) {
                let v = t * n / 3;
                exact = Some(v);
                lower = v;
                upper = v;
            } else {
                lower = floor(q(t * n, 3)) + 1;
                let general_upper = ceil(q(t * (c + 1) * (k + 1), 3)) - t;
                let (case, table) = three_rainbow_case(c, k);
                let factor = match (t, mode) {
                    (3, _) => q(1, 1),
                    (4, Mode::AsPrinted) if c.is_multiple_of(6) => q(5, 3),
                    (4, _) => q(4, 3),
                    _ => q(5, 3),
                };
                sources.push(match t {
                    3 => table,
                    4 => Source::FourRainbowCases,
                    _ => Source::FiveRainbowCases,
                });
                let mut up = general_upper.min(ceil(factor * case));
                if t == 3 && k == 1 {
                    if let Some(v) = known_exact_pn1(n, 3) {
                        sources.push(Source::PrismExact);
                        exact = Some(v);
                        up = up.min(v);
                    }
                }
                upper = up;
            }
        }
        _ => {
            sources.push(Source::RegularLowerBound);
            exact = Some(order);
            lower = order;
            upper = order;
        }
    }
    Raw {
        lower,
        upper,
        exact,
        sources,
        discrepancy,
    }
}

/// Bounds on `γ_rt(P(ck,k))`.
///
/// In [`Mode::Corrected`] the lower bound is additionally raised to the best
/// lower bound for any smaller `t`, and the upper bound lowered to the best
/// upper bound for any larger `t` (including `|V|` from `t >= 6`).
pub fn bounds_pckk(c: u64, k: u64, t: u64, mode: Mode) -> Result<BoundReport> {
    if c < 3 {
        return Err(Error::domain(format!("P(ck,k) bounds need c >= 3, got c = {c}")));
    }
    if k < 1 {
        return Err(Error::domain("P(ck,k) bounds need k >= 1"));
    }
    if !(1..=16).contains(&t) {
        return Err(Error::domain(format!("t = {t} outside 1..=16")));
    }
    PetersenParams::new((c * k) as usize, k as usize)?;

    let mut raw = raw_bounds(c, k, t, mode);
    if mode == Mode::Corrected {
        let mut lower = raw.lower;
        let mut upper = raw.upper;
        for s in 1..t {
            lower = lower.max(raw_bounds(c, k, s, mode).lower);
        }
        for s in t + 1..=t.max(6) {
            upper = upper.min(raw_bounds(c, k, s, mode).upper);
        }
        if lower != raw.lower || upper != raw.upper {
            raw.sources.push(Source::MonotoneInT);
        }
        raw.lower = lower;
        raw.upper = upper;
    }
    let exact = raw.exact.or((raw.lower == raw.upper).then_some(raw.lower));
    Ok(BoundReport {
        lower: raw.lower,
        upper: raw.upper,
        exact,
        sources: raw.sources,
        mode,
        discrepancy: raw.discrepancy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generic_values() {
        assert_eq!(generic_lower_bound(12, 3, 4), 8);
        assert_eq!(generic_lower_bound(12, 3, 5), 10);
        assert_eq!(generic_lower_bound(8, 3, 6), 8);
        assert_eq!(generic_lower_bound(14, 3, 3), 7);
        assert_eq!(generic_lower_bound(10, 3, 1), 2);
    }

    #[test]
    fn characterization() {
        assert!(is_characterized_extremal(6, 1, 3).unwrap());
        assert_eq!(characterized_exact(6, 1, 3).unwrap(), Some(6));
        assert_eq!(characterized_exact(6, 1, 5).unwrap(), Some(10));
        assert!(!is_characterized_extremal(12, 2, 4).unwrap());
        assert!(is_characterized_extremal(12, 7, 4).unwrap());
        assert!(is_characterized_extremal(6, 1, 2).is_err());
        assert!(is_characterized_extremal(6, 1, 6).is_err());
    }

    #[test]
    fn prism_values() {
        assert_eq!(known_exact_pn1(6, 3), Some(6));
        assert_eq!(known_exact_pn1(10, 3), Some(12));
        assert_eq!(known_exact_pn1(7, 3), Some(8));
        assert_eq!(known_exact_pn1(7, 2), Some(7));
        assert_eq!(known_exact_pn1(4, 2), None);
        assert_eq!(known_exact_pn1(6, 4), None);
    }

    #[test]
    fn small_characterizations() {
        assert!(characterization_r1(4, 1));
        assert!(!characterization_r1(6, 1));
        assert!(characterization_r1(8, 3));
        assert!(characterization_r2(5, 2));
        assert!(!characterization_r2(5, 3));
        assert!(characterization_r2(10, 8));
    }

    #[test]
    fn pckk_examples() {
        let r = bounds_pckk(6, 1, 3, Mode::Corrected).unwrap();
        assert_eq!(r.exact, Some(6));

        let r = bounds_pckk(6, 2, 3, Mode::AsPrinted).unwrap();
        assert_eq!((r.lower, r.upper), (13, 15));
        assert!(r.sources.contains(&Source::ThreeRainbowCasesMultipleOfSix));
        let r = bounds_pckk(6, 2, 3, Mode::Corrected).unwrap();
        assert_eq!((r.lower, r.upper), (13, 15));

        let r = bounds_pckk(3, 2, 5, Mode::AsPrinted).unwrap();
        assert_eq!(r.upper, 14);
        assert_eq!(r.lower, 11);
        let r = bounds_pckk(3, 2, 5, Mode::Corrected).unwrap();
        assert_eq!(r.upper, 12);
        assert!(r.sources.contains(&Source::MonotoneInT));

        let r = bounds_pckk(4, 1, 6, Mode::Corrected).unwrap();
        assert_eq!(r.exact, Some(8));
    }

    #[test]
    fn four_rainbow_modes_differ_only_where_coefficients_do() {
        // c = 6, k = 2: min(28 - 4, 5/3 * 15) as printed, 4/3 * 15 corrected
        let printed = bounds_pckk(6, 2, 4, Mode::AsPrinted).unwrap();
        assert_eq!(printed.upper, 24);
        let fixed = raw_bounds(6, 2, 4, Mode::Corrected);
        assert_eq!(fixed.upper, 20);
        // c odd: identical tables
        assert_eq!(
            raw_bounds(5, 2, 4, Mode::AsPrinted).upper,
            raw_bounds(5, 2, 4, Mode::Corrected).upper
        );
    }

    #[test]
    fn two_rainbow_discrepancy_is_reported() {
        let r = bounds_pckk(5, 2, 2, Mode::Corrected).unwrap();
        let d = r.discrepancy.unwrap();
        assert_eq!(d.readings, vec![10, 8]);
        assert_eq!(r.exact, None);
    }

    fn grid() -> impl Iterator<Item = (u64, u64, u64)> {
        (3..=12u64).flat_map(|c| (1..=6u64).flat_map(move |k| (1..=7u64).map(move |t| (c, k, t))))
    }

    #[test]
    fn grid_is_consistent() {
        for (c, k, t) in grid() {
            for mode in [Mode::AsPrinted, Mode::Corrected] {
                let r = bounds_pckk(c, k, t, mode).unwrap();
                assert!(r.lower <= r.upper, "({c},{k},{t}) {mode:?}: {r:?}");
                if let Some(e) = r.exact {
                    assert!(r.contains(e), "({c},{k},{t}) {mode:?}: {r:?}");
                }
            }
        }
    }

    #[test]
    fn corrected_is_monotone_in_t() {
        for c in 3..=12u64 {
            for k in 1..=6u64 {
                let rs: Vec<_> = (1..=8).map(|t| bounds_pckk(c, k, t, Mode::Corrected).unwrap()).collect();
                for w in rs.windows(2) {
                    assert!(w[0].lower <= w[1].lower && w[0].upper <= w[1].upper, "({c},{k}): {rs:?}");
                }
            }
        }
    }

    #[test]
    fn characterized_exact_meets_generic() {
        for (c, k, t) in grid().filter(|&(_, _, t)| (3..=5).contains(&t)) {
            let n = c * k;
            if is_characterized_extremal(n, k, t).unwrap() {
                let r = bounds_pckk(c, k, t, Mode::Corrected).unwrap();
                assert_eq!(r.exact, Some(generic_lower_bound(2 * n, 3, t)));
            }
        }
    }

    #[test]
    fn domain_errors() {
        assert!(bounds_pckk(2, 1, 3, Mode::Corrected).is_err());
        assert!(bounds_pckk(3, 0, 3, Mode::Corrected).is_err());
        assert!(bounds_pckk(3, 1, 0, Mode::Corrected).is_err());
    }
}
