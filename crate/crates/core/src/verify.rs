//! Self-check suites run by `updown verify`.

use std::fmt;

use num_traits::{One, Zero};

use crate::basis::{self, construct, table::TABLE, ConstructMethod, ValueRoute};
use crate::error::{budget, Result};
use crate::kernel::{binomial_general, factorial, thue_morse, Integer, Rational};
use crate::lab;
use crate::oracle::counts_all;
use crate::output::TableRow;
use crate::series;
use crate::signature::{alternating_index, exponents};

pub const VERIFY_LIMIT: u32 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Core,
    Identities,
    Roots,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Core => "core",
            Suite::Identities => "identities",
            Suite::Roots => "roots",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn is_ok(&self) -> bool {
        self.failed() == 0
    }

    fn run(
        &mut self,
        name: impl Into<String>,
        f: impl FnOnce() -> std::result::Result<(), String>,
    ) {
        let (passed, detail) = match f() {
            Ok(()) => (true, String::new()),
            Err(d) => (false, d),
        };
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail,
        });
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            if c.passed {
                writeln!(f, "[PASS] {}", c.name)?;
            } else {
                writeln!(f, "[FAIL] {}: {}", c.name, c.detail)?;
            }
        }
        write!(f, "{} passed, {} failed", self.passed(), self.failed())
    }
}

/// The stored table of the first 32 basis polynomials.
pub fn default_table() -> Vec<TableRow> {
    TABLE
        .iter()
        .map(|&(k, terms, constant)| TableRow {
            k,
            terms: terms.iter().map(|&(t, c)| (t, c.into())).collect(),
            constant,
        })
        .collect()
}

fn ensure(cond: bool, detail: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(detail())
    }
}

pub fn run(suite: Suite, n_max: u32, table: &[TableRow]) -> Result<SuiteReport> {
    budget("verify n-max", n_max as u64, VERIFY_LIMIT as u64)?;
    let n_max = n_max.max(2);
    let mut report = SuiteReport::default();
    if matches!(suite, Suite::All | Suite::Core) {
        core(&mut report, n_max, table);
    }
    if matches!(suite, Suite::All | Suite::Identities) {
        identities(&mut report, n_max);
    }
    if matches!(suite, Suite::All | Suite::Roots) {
        roots(&mut report, n_max);
    }
    Ok(report)
}

fn core(report: &mut SuiteReport, n_max: u32, table: &[TableRow]) {
    report.run("worked example counts 40 on every route", || {
        for route in ValueRoute::ALL {
            let v = basis::value(6, 13, route).map_err(|e| e.to_string())?;
            ensure(v == 40.into(), || format!("{} gave {v}", route.name()))?;
        }
        Ok(())
    });
    report.run(
        format!("all routes match the full scan for n <= {n_max}"),
        || {
            for n in 1..=n_max {
                let row = counts_all(n).map_err(|e| e.to_string())?;
                for (k, expect) in row.iter().enumerate() {
                    for route in ValueRoute::ALL {
                        let v = basis::value(n, k as u64, route).map_err(|e| e.to_string())?;
                        ensure(&v == expect, || {
                            format!("n={n} k={k} {}: {v} != {expect}", route.name())
                        })?;
                    }
                }
            }
            Ok(())
        },
    );
    report.run("stored table matches constructed polynomials", || {
        ensure(table.len() == 32, || {
            format!("table has {} rows", table.len())
        })?;
        for row in table {
            let p = construct(row.k, ConstructMethod::Recursion);
            ensure(
                row.terms == p.terms() && row.constant == p.constant() as i64,
                || format!("k={} table differs from {p}", row.k),
            )?;
        }
        Ok(())
    });
    let k_max = 1u64 << n_max;
    report.run(format!("five constructions agree for k < {k_max}"), || {
        for k in 0..k_max {
            let reference = construct(k, ConstructMethod::Recursion);
            for method in ConstructMethod::ALL {
                ensure(construct(k, method) == reference, || {
                    format!("k={k} {}", method.name())
                })?;
            }
        }
        Ok(())
    });
    report.run("complementary indices give equal counts", || {
        for n in 1..=n_max {
            let top = (1u64 << (n - 1)) - 1;
            for k in 0..=top {
                let a = construct(k, ConstructMethod::Recursion).evaluate(n as i64);
                let b = construct(top - k, ConstructMethod::Recursion).evaluate(n as i64);
                ensure(a == b, || format!("n={n} k={k}"))?;
            }
        }
        Ok(())
    });
}

fn identities(report: &mut SuiteReport, n_max: u32) {
    let ints = |v: &[i64]| v.iter().map(|&x| Integer::from(x)).collect::<Vec<_>>();
    report.run("row sums and partial sums", || {
        for n in 2..=n_max + 2 {
            for r in 1..n {
                let (s, p) = series::partial_sum_check(n, r).map_err(|e| e.to_string())?;
                ensure(s == p, || format!("n={n} r={r}: {s} != {p}"))?;
            }
            let (s, _) = series::partial_sum_check(n, n - 1).map_err(|e| e.to_string())?;
            ensure(s == factorial(n), || format!("n={n}"))?;
        }
        Ok(())
    });
    report.run("subset determinant equals C(n-1, m)", || {
        for n in 1..=n_max as i64 + 2 {
            for m in 0..n as u32 {
                let d = basis::subset_identity_det(n, m);
                ensure(d == binomial_general(n - 1, m), || {
                    format!("n={n} m={m}: {d}")
                })?;
            }
        }
        Ok(())
    });
    report.run("zigzag values and tan+sec coefficients", || {
        let printed = ints(&[1, 1, 2, 5, 16, 61]);
        for (i, v) in printed.iter().enumerate() {
            let n = i as u32 + 1;
            let got = basis::value(n, alternating_index(n), ValueRoute::Poly)
                .map_err(|e| e.to_string())?;
            ensure(&got == v, || format!("n={n}: {got}"))?;
        }
        let a = series::tan_sec_coefficients(12).map_err(|e| e.to_string())?;
        for n in 1..=12u32 {
            ensure(a[n as usize] == series::zigzag(n), || format!("n={n}"))?;
        }
        Ok(())
    });
    report.run("euler and tangent determinants", || {
        let e = |m| series::euler_determinant(m).map_err(|e| e.to_string());
        ensure(e(1)? == (-1).into() && e(2)? == 5.into(), || {
            "printed values".into()
        })?;
        for m in 1..=6u32 {
            let sign = if m % 2 == 0 { 1 } else { -1 };
            ensure(e(m)? == series::zigzag(2 * m) * sign, || format!("m={m}"))?;
        }
        let t = |m| series::tangent_determinant(m).map_err(|e| e.to_string());
        ensure(t(2)? == (-2).into() && t(3)? == 16.into(), || {
            "tangent values".into()
        })?;
        let b = |m| series::bernoulli_recover(m).map_err(|e| e.to_string());
        ensure(b(2)? == Rational::new((-1).into(), 30.into()), || {
            "B_4".into()
        })?;
        ensure(b(3)? == Rational::new(1.into(), 42.into()), || "B_6".into())?;
        Ok(())
    });
    report.run("row polynomials", || {
        let p3 = series::pn_polynomial(3).map_err(|e| e.to_string())?;
        ensure(p3.coeffs() == ints(&[1, 2, 2, 1]).as_slice(), || {
            "P_3".into()
        })?;
        for n in 1..=n_max {
            let p = series::pn_polynomial(n).map_err(|e| e.to_string())?;
            ensure(p.eval(&Integer::one()) == factorial(n), || {
                format!("P_{n}(1)")
            })?;
            if n <= 6 {
                let ok = series::gf_quotient_check(n, series::default_gf_order(n))
                    .map_err(|e| e.to_string())?;
                ensure(ok, || format!("generating function n={n}"))?;
            }
        }
        Ok(())
    });
    report.run("formal value rows are periodic and positive", || {
        for a in 1..=6u32 {
            let period = 1u64 << a;
            let row = basis::row_sequence(a, 1 << (a + 4));
            for (k, v) in row.iter().enumerate() {
                let base = &row[k % period as usize];
                ensure(v == base || *v == -base.clone(), || format!("a={a} k={k}"))?;
                let expected_sign = thue_morse(k as u64 - k as u64 % period);
                ensure(v.is_zero() || v * expected_sign > Integer::zero(), || {
                    format!("sign a={a} k={k}")
                })?;
            }
            for k in 1..=1usize << (a - 1) {
                ensure(row[k - 1] >= Integer::one(), || {
                    format!("a={a} k={}", k - 1)
                })?;
            }
        }
        Ok(())
    });
}

fn roots(report: &mut SuiteReport, n_max: u32) {
    let k_max = 1u64 << n_max.min(8);
    report.run(
        format!("positive roots are the exponents for k <= {k_max}"),
        || {
            for k in 1..=k_max {
                let r = basis::positive_roots(k);
                ensure(r == exponents(k), || format!("k={k}: {r:?}"))?;
            }
            Ok(())
        },
    );
    report.run("rank drops exactly at the exponents", || {
        for k in 1..=64u64 {
            for n in 0..=n_max as i64 {
                let full = basis::rank_check(n, k).map_err(|e| e.to_string())?;
                ensure(full != exponents(k).contains(&(n as u32)), || {
                    format!("n={n} k={k}")
                })?;
            }
        }
        Ok(())
    });
    report.run("prime congruence", || {
        for n in [5u32, 7, 11, 13] {
            for k in 0..1u64 << (n - 1) {
                let c = basis::congruence_residue(n, k).map_err(|e| e.to_string())?;
                ensure(!c.applicable || c.holds(), || format!("n={n} k={k}"))?;
            }
        }
        Ok(())
    });
    report.run("recognition round trip", || {
        for k in 0..=64 {
            let mono = construct(k, ConstructMethod::Recursion).to_monomial();
            ensure(
                basis::recognize(&mono) == Some((Rational::one(), k)),
                || format!("k={k}"),
            )?;
        }
        Ok(())
    });
    report.run("all-real and minus-one lists", || {
        let all_real: Vec<u64> = (1..=32)
            .filter(|&k| {
                lab::real_root_profile(k)
                    .map(|p| p.all_real)
                    .unwrap_or(false)
            })
            .collect();
        ensure(all_real == lab::PRINTED_ALL_REAL, || {
            format!("{all_real:?}")
        })?;
        let minus = lab::minus_one_root_scan(23).map_err(|e| e.to_string())?;
        ensure(minus == lab::PRINTED_MINUS_ONE, || format!("{minus:?}"))
    });
}
