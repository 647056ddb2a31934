use std::fmt::Write as _;

use cherednik_core::cherednik::{
    clifford_split, closed_generators, findim_check, is_simple_spectrum, l_dimension, lattice_graded_dims, norm,
    z_weight, ClosedGenerator, SubmoduleExpr,
};
use cherednik_core::combinatorics::{syt_count, syt_enumerate};
use cherednik_core::oracle::{verify_suite, CheckStatus, TruncatedModule};
use cherednik_core::{Composition, Error, MultiPartition, ParamPoint, StandardTableau};
use serde_json::{json, Value};

use crate::config::PointSource;
use crate::CliError;

/// A finished report in both renderings.
pub struct Output {
    pub json: Value,
    pub text: String,
    /// Nonzero when the report itself records a failure.
    pub exit: u8,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output { json, text, exit: 0 }
    }
}

pub struct Job {
    pub shape: MultiPartition,
    pub point: Option<(ParamPoint, PointSource)>,
    pub maxdeg: Option<u32>,
    pub pdiv: Option<u32>,
    pub mu: Option<Composition>,
    pub tableau: Option<StandardTableau>,
    pub list: bool,
}

impl Job {
    fn point(&self) -> Result<&ParamPoint, CliError> {
        self.point.as_ref().map(|(p, _)| p).ok_or_else(|| CliError::Input("this command needs --point".into()))
    }

    fn header(&self) -> String {
        let mut s = format!("λ = {}  (r = {}, n = {})\n", self.shape, self.shape.r(), self.shape.n());
        if let Some((p, src)) = &self.point {
            let _ = write!(s, "point: {}", point_text(p));
            if let PointSource::Generic { seed, .. } = src {
                let _ = write!(s, "  (generic, seed {seed})");
            }
            s.push('\n');
        }
        s
    }

    fn base_json(&self, command: &str) -> Value {
        let mut v = json!({ "command": command, "shape": self.shape });
        if let Some((p, src)) = &self.point {
            v["point"] = json!(p);
            v["point_source"] = json!(src);
        }
        v
    }

    /// (μ,T) pairs selected by --mu and --tableau: one tableau or all of them.
    fn pairs(&self) -> Result<Vec<(Composition, StandardTableau)>, CliError> {
        if self.tableau.is_none() && syt_count(&self.shape) > LIST_LIMIT {
            return Err(CliError::Input("too many tableaux; pick one with --tableau".into()));
        }
        let mu = self.mu.clone().unwrap_or_else(|| Composition::zero(self.shape.n()));
        Ok(match &self.tableau {
            Some(t) => vec![(mu, t.clone())],
            None => syt_enumerate(&self.shape).into_iter().map(|t| (mu.clone(), t)).collect(),
        })
    }
}

pub fn point_text(p: &ParamPoint) -> String {
    let d: Vec<String> = p.d_values().iter().map(|q| q.to_string()).collect();
    format!("κ = {}, c₀ = {}, d = ({})", p.kappa(), p.c0(), d.join(", "))
}

fn merge(mut base: Value, extra: Value) -> Value {
    if let (Some(b), Value::Object(e)) = (base.as_object_mut(), extra) {
        b.extend(e);
    }
    base
}

const LIST_LIMIT: u128 = 100_000;

pub fn syt(job: &Job) -> Result<Output, CliError> {
    let count = syt_count(&job.shape);
    let mut text = job.header();
    let _ = writeln!(text, "standard tableaux: {count}");
    let mut extra = json!({ "count": u64::try_from(count).map_or_else(|_| json!(count.to_string()), |c| json!(c)) });
    if job.list {
        if count > LIST_LIMIT {
            return Err(Error::OutOfScope(format!("{count} tableaux is too many to list")).into());
        }
        let all = syt_enumerate(&job.shape);
        for (k, t) in all.iter().enumerate() {
            let _ = writeln!(text, "  {k}: {t}");
        }
        extra["tableaux"] = json!(all);
    }
    Ok(Output::ok(merge(job.base_json("syt"), extra), text))
}

pub fn weights(job: &Job) -> Result<Output, CliError> {
    let mut text = job.header();
    let mut entries = Vec::new();
    for (mu, t) in job.pairs()? {
        let w = z_weight(&mu, &t);
        let forms: Vec<String> = w.alphas.iter().map(|a| a.to_string()).collect();
        let _ = writeln!(text, "μ = {mu}, T = {t}");
        let _ = writeln!(text, "  z: ({})", forms.join(", "));
        let _ = writeln!(text, "  β: {:?}", w.residues);
        let mut e = json!({ "mu": mu, "tableau": t, "alphas": w.alphas, "residues": w.residues });
        if let Some((p, _)) = &job.point {
            let vals: Vec<String> = w.eval(p).iter().map(|q| q.to_string()).collect();
            let _ = writeln!(text, "  at the point: ({})", vals.join(", "));
            e["values"] = json!(vals);
        }
        entries.push(e);
    }
    Ok(Output::ok(merge(job.base_json("weights"), json!({ "weights": entries })), text))
}

pub fn norms(job: &Job) -> Result<Output, CliError> {
    let mut text = job.header();
    let mut entries = Vec::new();
    for (mu, t) in job.pairs()? {
        let nm = norm(&mu, &t);
        let _ = writeln!(text, "μ = {mu}, T = {t}");
        let _ = writeln!(text, "  ⟨f, f⟩/γ_T = {nm}");
        let mut e = json!({ "mu": mu, "tableau": t, "norm": nm, "text": nm.to_string() });
        if let Some((p, _)) = &job.point {
            match nm.eval(p) {
                Ok(v) => {
                    let _ = writeln!(text, "  at the point: {v}");
                    e["value"] = json!(v.to_string());
                }
                Err(err) => {
                    let _ = writeln!(text, "  at the point: {err}");
                    e["value"] = Value::Null;
                    e["value_error"] = json!(err.reason_code());
                }
            }
        }
        entries.push(e);
    }
    Ok(Output::ok(merge(job.base_json("norm"), json!({ "norms": entries })), text))
}

pub fn spectrum(job: &Job) -> Result<Output, CliError> {
    let rep = is_simple_spectrum(&job.shape, job.point()?)?;
    let mut text = job.header();
    if rep.simple {
        text.push_str("the spectrum is simple\n");
    } else {
        text.push_str("the spectrum is not simple; the point lies on\n");
        for v in &rep.violations {
            let _ = writeln!(text, "  {:?} hyperplane l = {}, m = {}, k = {}", v.family, v.l, v.m, v.k);
        }
    }
    Ok(Output::ok(merge(job.base_json("spectrum"), json!(rep)), text))
}

fn generator_lines(text: &mut String, gens: &[ClosedGenerator]) {
    if gens.is_empty() {
        text.push_str("M(λ) is irreducible at this point\n");
    }
    for (k, g) in gens.iter().enumerate() {
        let _ = writeln!(text, "  [{k}] {}  from  {} = 0", g.descriptor, g.defining_equation);
    }
}

pub fn generators(job: &Job) -> Result<Output, CliError> {
    let gens = closed_generators(&job.shape, job.point()?)?;
    let mut text = job.header();
    generator_lines(&mut text, &gens);
    let extra = json!({ "generators": gens, "irreducible": gens.is_empty() });
    Ok(Output::ok(merge(job.base_json("generators"), extra), text))
}

fn table(text: &mut String, rows: &[(&str, &[u64])]) {
    let width = rows.iter().map(|(_, v)| v.len()).max().unwrap_or(0);
    let _ = write!(text, "{:>10}", "degree");
    for d in 0..width {
        let _ = write!(text, " {d:>6}");
    }
    text.push('\n');
    for (name, vals) in rows {
        let _ = write!(text, "{name:>10}");
        for v in *vals {
            let _ = write!(text, " {v:>6}");
        }
        text.push('\n');
    }
}

pub fn lattice(job: &Job) -> Result<Output, CliError> {
    let p = job.point()?;
    let maxdeg = job.maxdeg.unwrap_or(4);
    let gens = closed_generators(&job.shape, p)?;
    let dims = lattice_graded_dims(&job.shape, p, &gens, &SubmoduleExpr::Radical, maxdeg)?;
    let mut text = job.header();
    generator_lines(&mut text, &gens);
    table(&mut text, &[("M(λ)", &dims.total), ("radical", &dims.submodule), ("L(λ)", &dims.quotient)]);
    let extra = json!({
        "generators": gens,
        "maxdeg": maxdeg,
        "total": dims.total,
        "radical": dims.submodule,
        "quotient": dims.quotient,
    });
    Ok(Output::ok(merge(job.base_json("lattice"), extra), text))
}

pub fn findim(job: &Job) -> Result<Output, CliError> {
    let p = job.point()?;
    let gens = closed_generators(&job.shape, p)?;
    let cert = findim_check(&job.shape, p, &gens)?;
    let l = l_dimension(&job.shape, &cert, &gens)?;
    let mut text = job.header();
    let _ = writeln!(text, "L(λ) is finite dimensional, dim = {}", l.dim);
    for c in &cert.chains {
        let boxes: Vec<String> = c.boxes.iter().map(|b| b.to_string()).collect();
        let _ = writeln!(text, "  corner {}: boxes {}  k = {:?}", c.corner, boxes.join(" → "), c.ks);
    }
    let _ = writeln!(text, "  bound B = {}", cert.bound);
    table(&mut text, &[("L(λ)", &l.graded)]);
    let extra = json!({ "finite": true, "dim": l.dim, "graded": l.graded, "certificate": cert });
    Ok(Output::ok(merge(job.base_json("findim"), extra), text))
}

pub fn clifford(job: &Job) -> Result<Output, CliError> {
    let p = job.point()?;
    let pdiv = job.pdiv.ok_or_else(|| CliError::Input("clifford needs --pdiv".into()))?;
    let gens = closed_generators(&job.shape, p)?;
    let cert = findim_check(&job.shape, p, &gens)?;
    let l = l_dimension(&job.shape, &cert, &gens)?;
    let rep = clifford_split(&job.shape, p, pdiv, &l.graded)?;
    let mut text = job.header();
    let _ = writeln!(text, "p = {}, orbit k = {}, summands p/k = {}", rep.p_div, rep.orbit_k, rep.num_summands);
    table(&mut text, &[("L(λ)", &l.graded), ("summand", &rep.graded_dims_per_summand)]);
    if rep.small_n_warning {
        text.push_str("warning: n < 3, the fixed subalgebra need not be the G(r,p,n) algebra\n");
    }
    let extra = json!({ "l_graded": l.graded, "l_dim": l.dim, "clifford": rep });
    Ok(Output::ok(merge(job.base_json("clifford"), extra), text))
}

pub fn verify(job: &Job) -> Result<Output, CliError> {
    let p = job.point()?;
    let maxdeg = job.maxdeg.unwrap_or(3);
    let m = TruncatedModule::new(&job.shape, p, maxdeg + 1)?;
    let rep = verify_suite(&m, maxdeg)?;
    let mut text = job.header();
    for c in &rep.checks {
        let status = match c.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skipped => "skipped",
        };
        let _ = writeln!(text, "{:<20} {status:<8} degrees {:?}", c.check, c.degrees);
        if let Some(ce) = &c.counterexample {
            let _ = writeln!(text, "    {ce}");
        }
    }
    let ok = rep.all_pass();
    let _ = writeln!(text, "{}", if ok { "all checks pass" } else { "some checks FAIL" });
    let extra = json!({ "all_pass": ok, "maxdeg": maxdeg, "checks": rep.checks });
    Ok(Output { json: merge(job.base_json("verify"), extra), text, exit: if ok { 0 } else { 2 } })
}
