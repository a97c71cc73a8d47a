use std::fmt::Write as _;

use serde::Serialize;

use wes_core::abelian::IntMatrix;
use wes_core::gamma_enum::{gamma_s_group, oracle_compare, GroupTable, OracleReport};
use wes_core::homalg::tensor_z2;
use wes_core::wes::{gamma5, validate as validate_data, GammaTuple};

use crate::input::{Groups, InputDocument};
use crate::report::{GammaGroupJson, HomologyJson, InvariantsJson, Template, TemplateHints, ValidationJson};
use crate::{exit, CliError, Outcome};

pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub json: bool,
    pub budget: u64,
    pub oracle: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            json: false,
            budget: DEFAULT_BUDGET,
            oracle: false,
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

pub fn validate(text: &str, opts: Options) -> Result<Outcome, CliError> {
    let data = InputDocument::parse(text)?.to_wes_data()?;
    let report = validate_data(&data);
    let stdout = if opts.json {
        to_json(&ValidationJson::from(&report))
    } else {
        report.to_string()
    };
    let code = if report.passed() {
        exit::OK
    } else if report.has_hypothesis_failure() {
        exit::HYPOTHESIS
    } else {
        exit::INPUT
    };
    Ok(Outcome { stdout, code })
}

pub fn invariants(text: &str, opts: Options) -> Result<Outcome, CliError> {
    let w = InputDocument::parse(text)?.to_wes_data()?.resolve()?;
    let report = w.report();
    Ok(Outcome::ok(if opts.json {
        to_json(&InvariantsJson::from(&report))
    } else {
        report.to_string()
    }))
}

fn matrix(m: &IntMatrix) -> String {
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    format!("[{}]", rows.join(","))
}

fn tuple(t: &GammaTuple) -> String {
    format!(
        "f6={} f5={} f4={} f3={}",
        matrix(t.f6.matrix()),
        matrix(t.f5.matrix()),
        matrix(t.f4.matrix()),
        matrix(t.f3.matrix())
    )
}

/// At most this many `(f₆, f₅)` pairs are listed in text output.
const LISTED_PAIRS: usize = 64;

fn gamma_group_text(t: &GroupTable, oracle: Option<&OracleReport>) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "ΓS(X): order {}, {} ({} of {} tuples in aut(H6) x aut(H5) x aut(H4) x aut(H3))",
        t.order, t.structure, t.order, t.product_size
    );
    let _ = writeln!(s, "generators:");
    for &i in &t.generators {
        let _ = writeln!(s, "  {}", tuple(&t.elements[i]));
    }
    let _ = writeln!(
        s,
        "image in aut(H6) x aut(H5): order {}, {}{}",
        t.top.order,
        t.top.structure,
        if t.top.is_full_product { " (all pairs)" } else { "" }
    );
    if t.top.pairs.len() <= LISTED_PAIRS {
        let pairs: Vec<String> = t
            .top
            .pairs
            .iter()
            .map(|(f6, f5)| format!("({}, {})", matrix(f6.matrix()), matrix(f5.matrix())))
            .collect();
        let _ = writeln!(s, "  (f6, f5) in {{{}}}", pairs.join(", "));
    }
    let gammas: Vec<String> = t.gammas.iter().map(|g| matrix(g.matrix())).collect();
    let _ = writeln!(s, "γ on Γ5 among accepted tuples: {}", gammas.join(", "));
    for n in &t.notes {
        let _ = writeln!(s, "note: {n}");
    }
    if let Some(r) = oracle {
        let _ = writeln!(
            s,
            "oracle: {} tuples, {} accepted by the criterion, {} by the oracle, {} disagreements",
            r.tuples,
            r.accepted_by_criterion,
            r.accepted_by_oracle,
            r.disagreements.len()
        );
        for d in &r.disagreements {
            let _ = writeln!(
                s,
                "  disagreement at {:?}: criterion {}, oracle {}",
                d.index, d.criterion, d.oracle
            );
        }
    }
    s
}

pub fn gamma_group(text: &str, opts: Options) -> Result<Outcome, CliError> {
    let w = InputDocument::parse(text)?.to_wes_data()?.resolve()?;
    let t = gamma_s_group(&w, opts.budget)?;
    let oracle = if opts.oracle {
        Some(oracle_compare(&w, opts.budget)?)
    } else {
        None
    };
    let stdout = if opts.json {
        to_json(&GammaGroupJson::new(&t, oracle.as_ref()))
    } else {
        gamma_group_text(&t, oracle.as_ref())
    };
    let code = match &oracle {
        Some(r) if !r.agree() => exit::DISAGREEMENT,
        _ => exit::OK,
    };
    Ok(Outcome { stdout, code })
}

pub fn homology(text: &str, opts: Options) -> Result<Outcome, CliError> {
    let doc = InputDocument::parse(text)?;
    let complex = doc
        .chain_complex
        .as_ref()
        .ok_or_else(|| CliError::parse("homology needs a chain_complex block".to_string()))?;
    let h = complex.homology()?;
    let b6_rows = tensor_z2(&h.h3)
        .0
        .is_trivial()
        .then(|| gamma5(&h.h3, &h.h4).map(|g| g.block_len()))
        .transpose()?;
    let out = HomologyJson {
        h3: (&h.h3).into(),
        h4: (&h.h4).into(),
        h5: (&h.h5).into(),
        h6: (&h.h6).into(),
        template: Template {
            groups: Groups::from(&h),
            b6: None,
            pi5_class: None,
        },
        hints: TemplateHints {
            b6_rows,
            b6_cols: h.h6.num_gens(),
            pi5_class_vectors: h.h5.torsion_len(),
            note: match b6_rows {
                Some(_) => "fill b6 (rows: generators of H4 ⊗ Z2 then of Λ²H3; columns: generators of H6) and \
                            pi5_class (one vector per torsion factor of H5, each over the generators of coker b6)"
                    .to_string(),
                None => "H3 ⊗ Z2 ≠ 0: this complex is outside the supported category".to_string(),
            },
        },
    };
    if opts.json {
        return Ok(Outcome::ok(to_json(&out)));
    }
    let mut s = String::new();
    let _ = writeln!(s, "H3 = {}", h.h3);
    let _ = writeln!(s, "H4 = {}", h.h4);
    let _ = writeln!(s, "H5 = {}", h.h5);
    let _ = writeln!(s, "H6 = {}", h.h6);
    match b6_rows {
        Some(r) => {
            let _ = writeln!(
                s,
                "b6: {r}x{} matrix; pi5_class: {} vector(s) over coker b6",
                h.h6.num_gens(),
                h.h5.torsion_len()
            );
        }
        None => {
            let _ = writeln!(s, "{}", out.hints.note);
        }
    }
    let _ = writeln!(s, "template:");
    s.push_str(&to_json(&out.template));
    Ok(Outcome::ok(s))
}
