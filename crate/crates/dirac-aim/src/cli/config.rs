//! Config-file ingestion.
//!
//! The format is line-oriented `key = value` pairs grouped under
//! bracketed section headers, with `#` comments:
//!
//! ```text
//! [physics]
//! q = 1.0          # deformation parameter
//! alpha = 0.5      # screening (fm^-1)
//! r_e = 0.1671     # equilibrium distance (fm)
//! M = 5.0          # mass (fm^-1)
//! V0 = 6.0
//! V1 = -1.0
//! C_s = 0.0        # optional, default 0
//! D = 5            # 3 or 5
//! n = 1            # radial quantum number
//!
//! [angular]        # either a full chain ...
//! a1 = 2
//! b1 = 2
//! n1 = 1
//! # ... a2/b2/n2 (D=3) up to a4/b4/n4 (D=5)
//! # ... or a direct orbital number:
//! # ell_override = 1
//!
//! [solver]         # all optional
//! steps = 20000
//! e_min = -4.9
//! e_max = 4.9
//! bisect_tol = 1e-10
//! z0 = 0.5
//! chain_reading = corrected   # or: literal
//! diagnostic = false
//!
//! [output]         # optional
//! path = out.csv
//! ```
//!
//! Unknown sections and keys are rejected with their line number; all
//! physical parameters are validated at parse time.

use std::collections::BTreeMap;

use crate::angular::{AxisSpec, ChainReading, ScarfParams};
use crate::error::{Error, Result};
use crate::qdeform::Deformation;
use crate::radial::RadialConfig;
use crate::spectrum::{AngularSpec, ProblemConfig, ScanSettings};

/// Fully parsed, validated run configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub problem: ProblemConfig,
    pub scan: ScanSettings,
    /// AIM probe point (interior of (0, 1)); the spectrum path does not
    /// evaluate determinants, but the value rides along for AIM demos.
    pub z0: f64,
    pub out_path: Option<String>,
    /// The raw text the config was parsed from (hashed for provenance).
    pub source_text: String,
}

/// One accepted key with its defining line number.
struct Entry {
    line: usize,
    value: String,
    used: bool,
}

/// Section -> key -> entry.
type KeyMap = BTreeMap<String, BTreeMap<String, Entry>>;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn split_sections(text: &str) -> Result<KeyMap> {
    const SECTIONS: &[&str] = &["physics", "angular", "solver", "output"];
    let mut map: KeyMap = BTreeMap::new();
    let mut current: Option<String> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if let Some(name) = line.strip_prefix('[') {
            let Some(name) = name.strip_suffix(']') else {
                return Err(parse_err(line_no, format!("malformed section header `{line}`")));
            };
            let name = name.trim().to_string();
            if !SECTIONS.contains(&name.as_str()) {
                return Err(parse_err(line_no, format!("unknown section `[{name}]`")));
            }
            if map.contains_key(&name) {
                return Err(parse_err(line_no, format!("duplicate section `[{name}]`")));
            }
            map.insert(name.clone(), BTreeMap::new());
            current = Some(name);
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(parse_err(line_no, format!("expected `key = value`, got `{line}`")));
        };
        let Some(section) = &current else {
            return Err(parse_err(line_no, "key outside any [section]"));
        };
        let key = key.trim().to_string();
        let value = value.trim().to_string();
        if value.is_empty() {
            return Err(parse_err(line_no, format!("empty value for `{key}`")));
        }
        let section_map = map.get_mut(section).expect("current section exists");
        if section_map.contains_key(&key) {
            return Err(parse_err(line_no, format!("duplicate key `{key}`")));
        }
        section_map.insert(
            key,
            Entry {
                line: line_no,
                value,
                used: false,
            },
        );
    }
    Ok(map)
}

/// Accessor that marks keys used so leftovers can be rejected.
struct Section<'a> {
    map: Option<&'a mut BTreeMap<String, Entry>>,
}

impl Section<'_> {
    fn raw(&mut self, key: &str) -> Option<(usize, String)> {
        let entry = self.map.as_mut()?.get_mut(key)?;
        entry.used = true;
        Some((entry.line, entry.value.clone()))
    }

    fn f64_opt(&mut self, key: &str) -> Result<Option<f64>> {
        match self.raw(key) {
            None => Ok(None),
            Some((line, v)) => v
                .parse::<f64>()
                .map(Some)
                .map_err(|_| parse_err(line, format!("`{key}` is not a number: `{v}`"))),
        }
    }

    fn f64_req(&mut self, key: &'static str) -> Result<f64> {
        self.f64_opt(key)?.ok_or(Error::MissingKey(key))
    }

    fn u32_opt(&mut self, key: &str) -> Result<Option<u32>> {
        match self.raw(key) {
            None => Ok(None),
            Some((line, v)) => v
                .parse::<u32>()
                .map(Some)
                .map_err(|_| parse_err(line, format!("`{key}` is not a nonnegative integer: `{v}`"))),
        }
    }

    fn u32_req(&mut self, key: &'static str) -> Result<u32> {
        self.u32_opt(key)?.ok_or(Error::MissingKey(key))
    }
}

/// Parse and validate a config document.
pub fn parse_config(text: &str) -> Result<RunConfig> {
    let mut map = split_sections(text)?;

    let mut physics = Section {
        map: map.get_mut("physics"),
    };
    let q = Deformation::new(physics.f64_req("q")?)?;
    let alpha = physics.f64_req("alpha")?;
    let r_e = physics.f64_req("r_e")?;
    let m = physics.f64_req("M")?;
    let v0 = physics.f64_req("V0")?;
    let v1 = physics.f64_req("V1")?;
    let c_s = physics.f64_opt("C_s")?.unwrap_or(0.0);
    let dimension = physics.u32_req("D")?;
    let n = physics.u32_req("n")?;

    let radial = RadialConfig {
        v0,
        v1,
        alpha,
        q,
        m,
        c_s,
        dimension,
        n,
    };
    radial.validate()?;
    if !(r_e > 0.0) {
        return Err(Error::InvalidParameter {
            name: "r_e",
            value: r_e,
            reason: "equilibrium distance must be > 0",
        });
    }

    let mut solver = Section {
        map: map.get_mut("solver"),
    };
    let mut scan = ScanSettings::default_for_mass(m);
    if let Some(steps) = solver.u32_opt("steps")? {
        scan.steps = steps as usize;
    }
    if let Some(v) = solver.f64_opt("e_min")? {
        scan.e_min = v;
    }
    if let Some(v) = solver.f64_opt("e_max")? {
        scan.e_max = v;
    }
    if let Some(v) = solver.f64_opt("bisect_tol")? {
        scan.bisect_tol = v;
    }
    let z0 = solver.f64_opt("z0")?.unwrap_or(0.5);
    let reading = match solver.raw("chain_reading") {
        None => ChainReading::Corrected,
        Some((line, v)) => match v.as_str() {
            "corrected" => ChainReading::Corrected,
            "literal" => ChainReading::LiteralLambda4,
            other => {
                return Err(parse_err(
                    line,
                    format!("`chain_reading` must be `corrected` or `literal`, got `{other}`"),
                ))
            }
        },
    };
    if let Some((line, v)) = solver.raw("diagnostic") {
        scan.diagnostic = v.parse::<bool>().map_err(|_| {
            parse_err(line, format!("`diagnostic` must be true or false, got `{v}`"))
        })?;
    }

    let mut angular = Section {
        map: map.get_mut("angular"),
    };
    let ell_override = angular.f64_opt("ell_override")?;
    let angular_spec = if let Some(l) = ell_override {
        AngularSpec::EllOverride(l)
    } else {
        let mut axes = Vec::new();
        for i in 1..dimension.min(5) as u8 {
            let (ak, bk, nk): (&'static str, &'static str, &'static str) = match i {
                1 => ("a1", "b1", "n1"),
                2 => ("a2", "b2", "n2"),
                3 => ("a3", "b3", "n3"),
                _ => ("a4", "b4", "n4"),
            };
            let a = angular.f64_opt(ak)?.ok_or(Error::MissingKey(ak))?;
            let b = angular.f64_opt(bk)?.ok_or(Error::MissingKey(bk))?;
            let n_i = angular.u32_opt(nk)?.ok_or(Error::MissingKey(nk))?;
            axes.push(AxisSpec {
                scarf: ScarfParams { axis: i, a, b, q },
                n: n_i,
            });
        }
        AngularSpec::Chain(axes)
    };

    let mut output = Section {
        map: map.get_mut("output"),
    };
    let out_path = output.raw("path").map(|(_, v)| v);

    // Anything not consumed is an unknown key.
    for (section, keys) in &map {
        for (key, entry) in keys {
            if !entry.used {
                return Err(parse_err(
                    entry.line,
                    format!("unknown key `{key}` in section `[{section}]`"),
                ));
            }
        }
    }

    Ok(RunConfig {
        problem: ProblemConfig {
            radial,
            r_e,
            angular: angular_spec,
            reading,
        },
        scan,
        z0,
        out_path,
        source_text: text.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = "\
[physics]
q = 1.0
alpha = 0.5
r_e = 0.1671
M = 5.0
V0 = 6.0
V1 = -1.0
D = 3
n = 1

[angular]
ell_override = 0
";

    #[test]
    fn minimal_parses() {
        let cfg = parse_config(MINIMAL).unwrap();
        assert_eq!(cfg.problem.radial.q.q(), 1.0);
        assert_eq!(cfg.problem.radial.c_s, 0.0);
        assert_eq!(cfg.scan.steps, 20_000);
        assert_eq!(cfg.z0, 0.5);
        assert!(matches!(cfg.problem.angular, AngularSpec::EllOverride(l) if l == 0.0));
    }

    #[test]
    fn missing_mandatory_key_is_named() {
        let text = MINIMAL.replace("M = 5.0\n", "");
        match parse_config(&text) {
            Err(Error::MissingKey(k)) => assert_eq!(k, "M"),
            other => panic!("expected MissingKey(M), got {other:?}"),
        }
    }

    #[test]
    fn unknown_key_rejected_with_line() {
        let text = format!("{MINIMAL}bogus = 1\n");
        match parse_config(&text) {
            Err(Error::Parse { line, msg }) => {
                assert!(msg.contains("bogus"), "{msg}");
                assert!(line > 0);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn chain_axes_required_without_override() {
        let text = MINIMAL.replace("ell_override = 0", "a1 = 2\nb1 = 2\nn1 = 1");
        match parse_config(&text) {
            Err(Error::MissingKey(k)) => assert_eq!(k, "a2"),
            other => panic!("expected MissingKey(a2), got {other:?}"),
        }
    }
}
