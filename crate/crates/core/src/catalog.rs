//! Built-in parameterized families of (Lie algebra, metric) instances.
//!
//! Parameters are concrete rationals. Family names and parameter keys are part
//! of the command-line contract.

use std::collections::BTreeMap;

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{format_rational, int, one, rat, Matrix, Rational};
use crate::lie::{LieAlgebra, StructureTable};
use crate::metric::PseudoMetric;

pub type Params = BTreeMap<String, Rational>;

#[derive(Debug, Clone, Serialize)]
pub struct ParamSpec {
    pub name: &'static str,
    pub default: &'static str,
    pub note: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilySpec {
    pub name: &'static str,
    pub dim_rule: &'static str,
    pub params: Vec<ParamSpec>,
    pub constraints: Vec<&'static str>,
    pub unimodular: &'static str,
    pub description: &'static str,
}

/// A validated instance together with the parameters that produced it.
#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub family: Option<String>,
    pub params: Params,
    pub algebra: LieAlgebra,
    pub metric: PseudoMetric,
}

impl Instance {
    pub fn new(name: impl Into<String>, algebra: LieAlgebra, metric: PseudoMetric) -> Result<Self> {
        if algebra.dim() != metric.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                found: metric.dim(),
            });
        }
        Ok(Self {
            name: name.into(),
            family: None,
            params: Params::new(),
            algebra,
            metric,
        })
    }

    /// `family(k=v, ...)` with the resolved parameters.
    pub fn label(&self) -> String {
        if self.params.is_empty() {
            return self.name.clone();
        }
        let ps: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={}", format_rational(v)))
            .collect();
        format!("{}({})", self.name, ps.join(","))
    }
}

const P_ABC: [ParamSpec; 3] = [
    ParamSpec { name: "a", default: "1", note: "<e1,e1>, nonzero" },
    ParamSpec { name: "b", default: "1", note: "<e2,e2>, nonzero" },
    ParamSpec { name: "c", default: "-1", note: "<e3,e3>, nonzero" },
];

pub fn list_families() -> Vec<FamilySpec> {
    vec![
        FamilySpec {
            name: "abelian",
            dim_rule: "n",
            params: vec![
                ParamSpec { name: "n", default: "3", note: "dimension, 1..=12" },
                ParamSpec { name: "q", default: "1", note: "negative directions, 0..=n" },
            ],
            constraints: vec!["0 <= q <= n"],
            unimodular: "always",
            description: "zero brackets, metric diag(I_p, -I_q); control where every field is Killing",
        },
        FamilySpec {
            name: "heisenberg3",
            dim_rule: "3",
            params: vec![],
            constraints: vec![],
            unimodular: "always",
            description: "[e1,e2]=e3 with Lorentzian metric diag(1,1,-1); nilpotent control",
        },
        FamilySpec {
            name: "so3",
            dim_rule: "3",
            params: P_ABC.to_vec(),
            constraints: vec!["a, b, c nonzero"],
            unimodular: "always",
            description: "[e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2 with metric diag(a,b,c); compact simple control",
        },
        FamilySpec {
            name: "sl2",
            dim_rule: "3",
            params: P_ABC.to_vec(),
            constraints: vec!["a, b, c nonzero"],
            unimodular: "always",
            description: "[e1,e2]=2e2, [e1,e3]=-2e3, [e2,e3]=e1 with metric diag(a,b,c); non-compact simple control",
        },
        FamilySpec {
            name: "affine2",
            dim_rule: "2",
            params: vec![],
            constraints: vec![],
            unimodular: "never",
            description: "[e1,e2]=e2 with Gram [[0,1],[1,0]]; the 2-dimensional Lorentzian algebra with a lightlike non-Killing conformal field",
        },
        FamilySpec {
            name: "general3",
            dim_rule: "3",
            params: vec![
                ParamSpec { name: "alpha", default: "1", note: "[e1,e3] = alpha e1 + beta e2" },
                ParamSpec { name: "beta", default: "0", note: "" },
                ParamSpec { name: "gamma", default: "0", note: "[e2,e3] = gamma e1 + delta e2" },
                ParamSpec { name: "delta", default: "2", note: "" },
            ],
            constraints: vec!["alpha + delta != 0"],
            unimodular: "never",
            description: "abelian ideal span{e1,e2} acted on by e3, Gram rows (1,0,0),(0,0,-1),(0,-1,0)",
        },
        FamilySpec {
            name: "nonuni3",
            dim_rule: "3",
            params: vec![
                ParamSpec { name: "alpha", default: "1", note: "nonzero" },
                ParamSpec { name: "beta", default: "0", note: "" },
            ],
            constraints: vec!["alpha != 0"],
            unimodular: "never",
            description: "general3 with gamma=0, delta=2 alpha; the 3-dimensional Lorentzian algebras with non-Killing conformal fields",
        },
        FamilySpec {
            name: "damekricci4",
            dim_rule: "4",
            params: vec![ParamSpec { name: "alpha", default: "1", note: "[e1,e2] = alpha e3" }],
            constraints: vec![],
            unimodular: "never",
            description: "[e1,e2]=alpha e3, [e1,e4]=-e1/2, [e2,e4]=-e2/2, [e3,e4]=-e3 with Lorentzian Gram diag(1,1) + [[0,-1],[-1,0]]",
        },
        FamilySpec {
            name: "diagonalN",
            dim_rule: "n",
            params: vec![
                ParamSpec { name: "n", default: "4", note: "dimension, 2..=12" },
                ParamSpec { name: "lambda1..lambda{n-1}", default: "1,...,1,2", note: "[e_n,e_i] = lambda_i e_i" },
            ],
            constraints: vec!["lambda_i != 0", "sum of lambda_i != 0"],
            unimodular: "never",
            description: "[e_n,e_i]=lambda_i e_i with Lorentzian Gram I_{n-2} + [[0,1],[1,0]]; non-Killing conformal field iff lambda_i = lambda_{n-1}/2 for i <= n-2",
        },
        FamilySpec {
            name: "gradedN",
            dim_rule: "n",
            params: vec![
                ParamSpec { name: "n", default: "4", note: "dimension, 3..=12" },
                ParamSpec { name: "lambda1..lambda{n-1}", default: "1,...,1,2", note: "[e_n,e_i] = lambda_i e_i" },
                ParamSpec { name: "beta{i}_{j}", default: "1", note: "[e_i,e_j] = beta_ij e_{n-1} for 1 <= i < j <= n-2" },
            ],
            constraints: vec![
                "lambda_i != 0",
                "sum of lambda_i != 0",
                "beta_ij != 0 requires lambda_i + lambda_j = lambda_{n-1}",
            ],
            unimodular: "never",
            description: "diagonalN extended by a non-abelian derived algebra [e_i,e_j]=beta_ij e_{n-1}; same Lorentzian Gram",
        },
    ]
}

pub fn family_names() -> Vec<&'static str> {
    list_families().iter().map(|f| f.name).collect()
}

pub fn family(name: &str) -> Result<FamilySpec> {
    list_families()
        .into_iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::UnknownFamily(name.to_string()))
}

struct ParamReader<'a> {
    given: &'a Params,
    used: Params,
}

impl<'a> ParamReader<'a> {
    fn new(given: &'a Params) -> Self {
        Self {
            given,
            used: Params::new(),
        }
    }

    fn get(&mut self, key: &str, default: Rational) -> Rational {
        let v = self.given.get(key).cloned().unwrap_or(default);
        self.used.insert(key.to_string(), v.clone());
        v
    }

    fn count(&mut self, key: &str, default: i64, min: usize, max: usize) -> Result<usize> {
        let v = self.get(key, int(default));
        let bad = || Error::ConstraintViolated {
            param: key.to_string(),
            constraint: format!("integer in {min}..={max}"),
        };
        if !v.is_integer() {
            return Err(bad());
        }
        let n = v.to_integer().to_usize().ok_or_else(bad)?;
        if n < min || n > max {
            return Err(bad());
        }
        Ok(n)
    }

    fn nonzero(&mut self, key: &str, default: Rational) -> Result<Rational> {
        let v = self.get(key, default);
        if v.is_zero() {
            return Err(Error::ConstraintViolated {
                param: key.to_string(),
                constraint: format!("{key} != 0"),
            });
        }
        Ok(v)
    }

    /// Rejects keys that the family does not read.
    fn finish(self) -> Result<Params> {
        if let Some(k) = self.given.keys().find(|k| !self.used.contains_key(*k)) {
            return Err(Error::ConstraintViolated {
                param: k.clone(),
                constraint: "unknown parameter for this family".into(),
            });
        }
        Ok(self.used)
    }
}

fn lorentz_corner_gram(n: usize) -> Matrix {
    let mut g = Matrix::zeros(n, n);
    for i in 0..n - 2 {
        g[(i, i)] = one();
    }
    g[(n - 2, n - 1)] = one();
    g[(n - 1, n - 2)] = one();
    g
}

fn metric(gram: Matrix) -> Result<PseudoMetric> {
    PseudoMetric::new(gram)
}

fn diag_abc(r: &mut ParamReader) -> Result<PseudoMetric> {
    let a = r.nonzero("a", int(1))?;
    let b = r.nonzero("b", int(1))?;
    let c = r.nonzero("c", int(-1))?;
    metric(Matrix::diagonal(&[a, b, c]))
}

fn lambdas(r: &mut ParamReader, n: usize) -> Result<Vec<Rational>> {
    let mut ls = Vec::with_capacity(n - 1);
    for i in 1..n {
        let default = if i == n - 1 { int(2) } else { int(1) };
        ls.push(r.nonzero(&format!("lambda{i}"), default)?);
    }
    let sum: Rational = ls.iter().sum();
    if sum.is_zero() {
        return Err(Error::ConstraintViolated {
            param: "lambda".into(),
            constraint: "sum of lambda_i != 0".into(),
        });
    }
    Ok(ls)
}

fn diagonal_table(n: usize, ls: &[Rational]) -> Result<StructureTable> {
    let mut t = StructureTable::new(n);
    for (i, l) in ls.iter().enumerate() {
        t.set_single(n - 1, i, i, l.clone())?;
    }
    Ok(t)
}

/// Builds a validated instance of `name` from `params` (missing keys take defaults).
pub fn instantiate(name: &str, params: &Params) -> Result<Instance> {
    let mut r = ParamReader::new(params);
    let (algebra, metric) = match name {
        "abelian" => {
            let n = r.count("n", 3, 1, 12)?;
            let q = r.count("q", 1, 0, 12)?;
            if q > n {
                return Err(Error::ConstraintViolated {
                    param: "q".into(),
                    constraint: "0 <= q <= n".into(),
                });
            }
            (LieAlgebra::abelian(n), PseudoMetric::standard(n - q, q))
        }
        "heisenberg3" => {
            let mut t = StructureTable::new(3);
            t.set_single(0, 1, 2, one())?;
            (LieAlgebra::validate(t)?, PseudoMetric::standard(2, 1))
        }
        "so3" => {
            let mut t = StructureTable::new(3);
            t.set_single(0, 1, 2, one())?;
            t.set_single(1, 2, 0, one())?;
            t.set_single(2, 0, 1, one())?;
            (LieAlgebra::validate(t)?, diag_abc(&mut r)?)
        }
        "sl2" => {
            let mut t = StructureTable::new(3);
            t.set_single(0, 1, 1, int(2))?;
            t.set_single(0, 2, 2, int(-2))?;
            t.set_single(1, 2, 0, one())?;
            (LieAlgebra::validate(t)?, diag_abc(&mut r)?)
        }
        "affine2" => {
            let mut t = StructureTable::new(2);
            t.set_single(0, 1, 1, one())?;
            (
                LieAlgebra::validate(t)?,
                metric(Matrix::from_i64(&[&[0, 1], &[1, 0]]))?,
            )
        }
        "general3" | "nonuni3" => {
            let (alpha, beta, gamma, delta) = if name == "general3" {
                let a = r.get("alpha", int(1));
                let b = r.get("beta", int(0));
                let c = r.get("gamma", int(0));
                let d = r.get("delta", int(2));
                if (&a + &d).is_zero() {
                    return Err(Error::ConstraintViolated {
                        param: "alpha,delta".into(),
                        constraint: "alpha + delta != 0".into(),
                    });
                }
                (a, b, c, d)
            } else {
                let a = r.nonzero("alpha", int(1))?;
                let b = r.get("beta", int(0));
                let d = int(2) * &a;
                (a, b, int(0), d)
            };
            let mut t = StructureTable::new(3);
            t.set(0, 2, vec![alpha, beta, int(0)])?;
            t.set(1, 2, vec![gamma, delta, int(0)])?;
            (
                LieAlgebra::validate(t)?,
                metric(Matrix::from_i64(&[&[1, 0, 0], &[0, 0, -1], &[0, -1, 0]]))?,
            )
        }
        "damekricci4" => {
            let alpha = r.get("alpha", int(1));
            let mut t = StructureTable::new(4);
            t.set_single(0, 1, 2, alpha)?;
            t.set_single(0, 3, 0, rat(-1, 2))?;
            t.set_single(1, 3, 1, rat(-1, 2))?;
            t.set_single(2, 3, 2, int(-1))?;
            (
                LieAlgebra::validate(t)?,
                metric(Matrix::from_i64(&[
                    &[1, 0, 0, 0],
                    &[0, 1, 0, 0],
                    &[0, 0, 0, -1],
                    &[0, 0, -1, 0],
                ]))?,
            )
        }
        "diagonalN" => {
            let n = r.count("n", 4, 2, 12)?;
            let ls = lambdas(&mut r, n)?;
            (
                LieAlgebra::validate(diagonal_table(n, &ls)?)?,
                metric(lorentz_corner_gram(n))?,
            )
        }
        "gradedN" => {
            let n = r.count("n", 4, 3, 12)?;
            let ls = lambdas(&mut r, n)?;
            let mut t = diagonal_table(n, &ls)?;
            for i in 0..n.saturating_sub(2) {
                for j in i + 1..n - 2 {
                    let key = format!("beta{}_{}", i + 1, j + 1);
                    let beta = r.get(&key, int(1));
                    if beta.is_zero() {
                        continue;
                    }
                    if &ls[i] + &ls[j] != ls[n - 2] {
                        return Err(Error::ConstraintViolated {
                            param: key,
                            constraint: format!(
                                "nonzero beta{}_{} requires lambda{} + lambda{} = lambda{}",
                                i + 1,
                                j + 1,
                                i + 1,
                                j + 1,
                                n - 1
                            ),
                        });
                    }
                    t.set_single(i, j, n - 2, beta)?;
                }
            }
            (LieAlgebra::validate(t)?, metric(lorentz_corner_gram(n))?)
        }
        other => return Err(Error::UnknownFamily(other.to_string())),
    };
    let params = r.finish()?;
    Ok(Instance {
        name: name.to_string(),
        family: Some(name.to_string()),
        params,
        algebra,
        metric,
    })
}

/// Instances used by default in batch verification: every family at its
/// defaults plus parameter variants that exercise both branches.
pub fn default_instances() -> Vec<Instance> {
    let p = |pairs: &[(&str, Rational)]| -> Params {
        pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
    };
    let mut specs: Vec<(&str, Params)> = Vec::new();
    for n in 2..=4 {
        for q in 0..=n {
            specs.push(("abelian", p(&[("n", int(n)), ("q", int(q))])));
        }
    }
    specs.push(("heisenberg3", Params::new()));
    for (a, b, c) in [(1, 1, 1), (1, 1, -1), (1, -1, -1), (2, -3, 5)] {
        let abc = p(&[("a", int(a)), ("b", int(b)), ("c", int(c))]);
        specs.push(("so3", abc.clone()));
        specs.push(("sl2", abc));
    }
    specs.push(("affine2", Params::new()));
    for (a, b, c, d) in [(1, 0, 0, 2), (1, 1, 0, 2), (1, 2, 3, 4), (2, -1, 0, 1)] {
        specs.push((
            "general3",
            p(&[("alpha", int(a)), ("beta", int(b)), ("gamma", int(c)), ("delta", int(d))]),
        ));
    }
    for (a, b) in [(int(1), int(0)), (int(1), int(2)), (rat(-3, 2), int(1))] {
        specs.push(("nonuni3", p(&[("alpha", a), ("beta", b)])));
    }
    for a in [int(0), rat(1, 2), int(1), int(2)] {
        specs.push(("damekricci4", p(&[("alpha", a)])));
    }
    specs.push(("diagonalN", p(&[("n", int(3)), ("lambda1", int(1)), ("lambda2", int(2))])));
    specs.push(("diagonalN", p(&[("n", int(4)), ("lambda1", int(1)), ("lambda2", int(3)), ("lambda3", int(2))])));
    specs.push(("diagonalN", Params::new()));
    specs.push(("gradedN", Params::new()));
    specs.push(("gradedN", p(&[("n", int(5)), ("lambda4", int(2))])));
    specs
        .into_iter()
        .map(|(name, params)| instantiate(name, &params).expect("default catalog instance is valid"))
        .collect()
}

/// True when every `λ_i` (`i ≤ n−2`) equals `λ_{n−1}/2`.
pub fn half_lambda_condition(ls: &[Rational]) -> bool {
    let Some((last, rest)) = ls.split_last() else {
        return true;
    };
    let half = last * rat(1, 2);
    rest.iter().all(|l| *l == half)
}
