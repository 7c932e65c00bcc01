//! JSON file formats and the group shorthand.

use std::collections::BTreeMap;

use chaingroup_core::charmod::ModularCharacterTable;
use chaingroup_core::fusion::FusionRing;
use chaingroup_core::groups::GroupSpec;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// `{"type":"permutation",…}`, `{"type":"named",…}` or `{"type":"product",…}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupSpecJson {
    Permutation {
        degree: usize,
        generators: Vec<Vec<u32>>,
    },
    Named {
        name: String,
        #[serde(default)]
        params: Vec<i64>,
    },
    Product {
        factors: Vec<GroupSpecJson>,
    },
}

impl From<&GroupSpec> for GroupSpecJson {
    fn from(spec: &GroupSpec) -> Self {
        match spec {
            GroupSpec::Permutation { degree, generators } => GroupSpecJson::Permutation {
                degree: *degree,
                generators: generators.clone(),
            },
            GroupSpec::Named { name, params } => GroupSpecJson::Named {
                name: name.clone(),
                params: params.clone(),
            },
            GroupSpec::Product(fs) => GroupSpecJson::Product {
                factors: fs.iter().map(Into::into).collect(),
            },
        }
    }
}

impl From<&GroupSpecJson> for GroupSpec {
    fn from(spec: &GroupSpecJson) -> Self {
        match spec {
            GroupSpecJson::Permutation { degree, generators } => GroupSpec::Permutation {
                degree: *degree,
                generators: generators.clone(),
            },
            GroupSpecJson::Named { name, params } => GroupSpec::Named {
                name: name.clone(),
                params: params.clone(),
            },
            GroupSpecJson::Product { factors } => {
                GroupSpec::Product(factors.iter().map(Into::into).collect())
            }
        }
    }
}

/// Canonical serialization, used for cache keys.
pub fn canonical_spec(spec: &GroupSpec) -> String {
    serde_json::to_string(&GroupSpecJson::from(spec)).expect("group specs serialize")
}

/// Parses a group argument: inline JSON, or shorthand such as `cyclic:6`,
/// `dicyclic:2xcyclic:3`, `dicyclic(2) x cyclic(3)` or `klein4`.
pub fn parse_group_arg(arg: &str) -> Result<GroupSpec, CliError> {
    let arg = arg.trim();
    if arg.starts_with('{') {
        let json: GroupSpecJson = serde_json::from_str(arg)
            .map_err(|e| CliError::Input(format!("group spec JSON: {e}")))?;
        return Ok((&json).into());
    }
    let factors = arg
        .split('x')
        .map(|f| parse_factor(f.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(match <[GroupSpec; 1]>::try_from(factors) {
        Ok([single]) => single,
        Err(factors) => GroupSpec::Product(factors),
    })
}

fn parse_factor(s: &str) -> Result<GroupSpec, CliError> {
    let bad = || CliError::Input(format!("cannot parse group factor `{s}`"));
    let (name, params) = if let Some((name, rest)) = s.split_once(':') {
        (name, rest)
    } else if let Some((name, rest)) = s.split_once('(') {
        (name, rest.strip_suffix(')').ok_or_else(bad)?)
    } else {
        (s, "")
    };
    let name = name.trim();
    if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(bad());
    }
    let params = params
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<i64>().map_err(|_| bad()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GroupSpec::Named {
        name: name.to_string(),
        params,
    })
}

/// A character table over `F_p` in file form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableJson {
    pub p: u64,
    pub zeta: u64,
    pub class_sizes: Vec<u64>,
    pub inverse_class: Vec<usize>,
    pub degrees: Vec<u64>,
    pub values: Vec<Vec<u64>>,
}

impl From<&ModularCharacterTable> for TableJson {
    fn from(t: &ModularCharacterTable) -> Self {
        Self {
            p: t.p(),
            zeta: t.zeta(),
            class_sizes: t.class_sizes().to_vec(),
            inverse_class: t.inverse_class().to_vec(),
            degrees: t.degrees().to_vec(),
            values: t.values().to_vec(),
        }
    }
}

impl TableJson {
    /// Validates shape and orthogonality.
    pub fn into_table(self) -> Result<ModularCharacterTable, CliError> {
        ModularCharacterTable::from_parts(
            self.p,
            self.zeta,
            self.class_sizes,
            self.inverse_class,
            self.degrees,
            self.values,
        )
        .map_err(|e| CliError::Input(format!("character table: {e}")))
    }
}

/// A fusion ring in file form. Products are keyed `"a,b"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FusionJson {
    pub labels: Vec<String>,
    pub unit: String,
    pub dual: BTreeMap<String, String>,
    pub tensor: BTreeMap<String, BTreeMap<String, u64>>,
    #[serde(default)]
    pub commutative: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<BTreeMap<String, u64>>,
}

impl From<&FusionRing> for FusionJson {
    /// Every product not involving the unit is listed explicitly.
    fn from(ring: &FusionRing) -> Self {
        let n = ring.rank();
        let mut tensor = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                if i == ring.unit() || j == ring.unit() {
                    continue;
                }
                let out = ring
                    .product(i, j)
                    .iter()
                    .map(|&(k, m)| (ring.label(k).to_string(), m))
                    .collect();
                tensor.insert(format!("{},{}", ring.label(i), ring.label(j)), out);
            }
        }
        Self {
            labels: ring.labels().to_vec(),
            unit: ring.label(ring.unit()).to_string(),
            dual: (0..n)
                .map(|i| {
                    (
                        ring.label(i).to_string(),
                        ring.label(ring.dual(i)).to_string(),
                    )
                })
                .collect(),
            tensor,
            commutative: false,
            dims: ring
                .dims()
                .map(|d| (0..n).map(|i| (ring.label(i).to_string(), d[i])).collect()),
        }
    }
}

impl FusionJson {
    /// Fills in unit laws and (if flagged) the symmetric closure, then
    /// validates the fusion axioms.
    pub fn into_ring(self) -> Result<FusionRing, CliError> {
        self.assemble(true)
    }

    /// Like [`into_ring`](Self::into_ring) but checks only the shape; for
    /// data this program wrote itself.
    pub fn into_ring_unvalidated(self) -> Result<FusionRing, CliError> {
        self.assemble(false)
    }

    fn assemble(self, validate: bool) -> Result<FusionRing, CliError> {
        let input = |msg: String| CliError::Input(format!("fusion ring: {msg}"));
        let n = self.labels.len();
        let index: BTreeMap<&str, usize> = self
            .labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        if index.len() != n {
            return Err(input("labels must be distinct".into()));
        }
        if let Some(l) = self.labels.iter().find(|l| l.contains(',')) {
            return Err(input(format!("label `{l}` contains a comma")));
        }
        let lookup = |l: &str| {
            index
                .get(l)
                .copied()
                .ok_or_else(|| input(format!("unknown label `{l}`")))
        };
        let unit = lookup(&self.unit)?;
        let mut dual = vec![usize::MAX; n];
        for (a, b) in &self.dual {
            dual[lookup(a)?] = lookup(b)?;
        }
        if let Some(i) = dual.iter().position(|&d| d == usize::MAX) {
            return Err(input(format!("no dual given for `{}`", self.labels[i])));
        }

        let mut listed: Vec<Option<Vec<(usize, u64)>>> = vec![None; n * n];
        for (key, out) in &self.tensor {
            let (a, b) = key
                .split_once(',')
                .ok_or_else(|| input(format!("tensor key `{key}` is not `a,b`")))?;
            let (i, j) = (lookup(a.trim())?, lookup(b.trim())?);
            let entry = out
                .iter()
                .map(|(k, &m)| Ok((lookup(k)?, m)))
                .collect::<Result<Vec<_>, CliError>>()?;
            listed[i * n + j] = Some(entry);
        }
        let mut products = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let entry = match (&listed[i * n + j], &listed[j * n + i]) {
                    (Some(x), Some(y)) if self.commutative && normalize(x) != normalize(y) => {
                        return Err(input(format!(
                            "`{0},{1}` and `{1},{0}` differ but the ring is marked commutative",
                            self.labels[i], self.labels[j]
                        )))
                    }
                    (Some(x), _) => x.clone(),
                    (None, Some(y)) if self.commutative => y.clone(),
                    (None, _) if i == unit => vec![(j, 1)],
                    (None, _) if j == unit => vec![(i, 1)],
                    (None, _) => {
                        return Err(input(format!(
                            "product `{},{}` is not listed",
                            self.labels[i], self.labels[j]
                        )))
                    }
                };
                products.push(entry);
            }
        }
        let dims = match self.dims {
            None => None,
            Some(d) => {
                let mut out = vec![0; n];
                for (l, v) in d {
                    out[lookup(&l)?] = v;
                }
                Some(out)
            }
        };
        let ring = FusionRing::from_raw(self.labels, unit, dual, products, dims);
        let ring = if validate {
            ring.and_then(FusionRing::validated)
        } else {
            ring
        };
        ring.map_err(|e| CliError::Input(format!("fusion ring: {e}")))
    }
}

fn normalize(v: &[(usize, u64)]) -> Vec<(usize, u64)> {
    let mut v: Vec<_> = v.iter().copied().filter(|&(_, m)| m > 0).collect();
    v.sort_unstable();
    v
}

pub fn read_fusion_file(path: &std::path::Path) -> Result<FusionRing, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let json: FusionJson = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    json.into_ring()
}

pub fn read_table_file(path: &std::path::Path) -> Result<ModularCharacterTable, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let json: TableJson = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    json.into_table()
}

#[cfg(test)]
mod tests {
    use super::*;
    use chaingroup_core::fusion::{cyclic_group_ring, ising_ring};

    #[test]
    fn shorthand_forms() {
        assert_eq!(
            parse_group_arg("cyclic:6").unwrap(),
            GroupSpec::named("cyclic", &[6])
        );
        assert_eq!(
            parse_group_arg("klein4").unwrap(),
            GroupSpec::named("klein4", &[])
        );
        let prod = GroupSpec::product(vec![
            GroupSpec::named("dicyclic", &[2]),
            GroupSpec::named("cyclic", &[3]),
        ]);
        assert_eq!(parse_group_arg("dicyclic:2xcyclic:3").unwrap(), prod);
        assert_eq!(parse_group_arg(&prod.id()).unwrap(), prod);
        assert!(parse_group_arg("cyclic:two").is_err());
        assert!(parse_group_arg("").is_err());
    }

    #[test]
    fn spec_json_round_trip() {
        let text = r#"{"type":"product","factors":[{"type":"named","name":"dicyclic","params":[6]},{"type":"permutation","degree":3,"generators":[[1,2,0]]}]}"#;
        let spec = parse_group_arg(text).unwrap();
        assert_eq!(canonical_spec(&spec), text);
    }

    #[test]
    fn ising_file_form() {
        let text = r#"{"labels":["1","eps","sigma"],"unit":"1","dual":{"1":"1","eps":"eps","sigma":"sigma"},
            "tensor":{"sigma,sigma":{"1":1,"eps":1},"eps,eps":{"1":1},"eps,sigma":{"sigma":1}},"commutative":true}"#;
        let json: FusionJson = serde_json::from_str(text).unwrap();
        let ring = json.into_ring().unwrap();
        let reference = ising_ring();
        for i in 0..3 {
            for j in 0..3 {
                let name = |r: &FusionRing, k: usize| r.label(k).to_string();
                let a: Vec<_> = ring
                    .product(i, j)
                    .iter()
                    .map(|&(k, m)| (name(&ring, k), m))
                    .collect();
                let li = reference.index_of(ring.label(i)).unwrap();
                let lj = reference.index_of(ring.label(j)).unwrap();
                let mut b: Vec<_> = reference
                    .product(li, lj)
                    .iter()
                    .map(|&(k, m)| (name(&reference, k), m))
                    .collect();
                b.sort();
                let mut a = a;
                a.sort();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn missing_product_is_an_error() {
        let text = r#"{"labels":["1","a","b"],"unit":"1","dual":{"1":"1","a":"b","b":"a"},
            "tensor":{"a,a":{"b":1},"a,b":{"1":1},"b,b":{"a":1}}}"#;
        let json: FusionJson = serde_json::from_str(text).unwrap();
        assert!(json.clone().into_ring().is_err());
        let fixed = FusionJson {
            commutative: true,
            ..json
        };
        assert_eq!(fixed.into_ring().unwrap().rank(), 3);
    }

    #[test]
    fn ring_round_trip() {
        let ring = cyclic_group_ring(5);
        let back = FusionJson::from(&ring).into_ring().unwrap();
        assert_eq!(back, ring);
    }
}
