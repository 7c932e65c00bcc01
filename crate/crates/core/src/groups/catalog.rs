//! Named group families and the built-in catalog.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::{direct_product, FiniteGroup, GroupError, Permutation};

/// How to build a group: explicit generators, a named family, or a product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Permutation {
        degree: usize,
        generators: Vec<Vec<u32>>,
    },
    Named {
        name: String,
        params: Vec<i64>,
    },
    Product(Vec<GroupSpec>),
}

impl GroupSpec {
    pub fn named(name: &str, params: &[i64]) -> Self {
        GroupSpec::Named {
            name: name.to_string(),
            params: params.to_vec(),
        }
    }

    pub fn product(factors: Vec<GroupSpec>) -> Self {
        GroupSpec::Product(factors)
    }

    /// Short human-readable identifier, e.g. `dicyclic(2) x cyclic(3)`.
    pub fn id(&self) -> String {
        match self {
            GroupSpec::Permutation { degree, generators } => {
                format!("perm[degree={degree}, {} generators]", generators.len())
            }
            GroupSpec::Named { name, params } if params.is_empty() => name.clone(),
            GroupSpec::Named { name, params } => {
                let ps: Vec<String> = params.iter().map(|p| p.to_string()).collect();
                format!("{name}({})", ps.join(","))
            }
            GroupSpec::Product(factors) => {
                let fs: Vec<String> = factors
                    .iter()
                    .map(|f| match f {
                        GroupSpec::Product(_) => format!("[{}]", f.id()),
                        _ => f.id(),
                    })
                    .collect();
                fs.join(" x ")
            }
        }
    }

    /// Order of the group, when it is known without enumerating it.
    pub fn declared_order(&self) -> Option<usize> {
        match self {
            GroupSpec::Permutation { .. } => None,
            GroupSpec::Named { name, params } => family_order(name, params).ok(),
            GroupSpec::Product(factors) => factors.iter().try_fold(1usize, |acc, f| {
                f.declared_order().and_then(|n| acc.checked_mul(n))
            }),
        }
    }

    pub fn build(&self, bound: usize) -> Result<FiniteGroup, GroupError> {
        match self {
            GroupSpec::Permutation { degree, generators } => {
                let gens = generators
                    .iter()
                    .map(|g| Permutation::from_images(g.clone()))
                    .collect::<Result<Vec<_>, _>>()?;
                FiniteGroup::with_bound(*degree, gens, bound)
            }
            GroupSpec::Named { name, params } => make_named_group(name, params, bound),
            GroupSpec::Product(factors) => {
                if let Some(n) = self.declared_order() {
                    if n > bound {
                        return Err(GroupError::OrderBoundExceeded { bound });
                    }
                }
                let mut acc = FiniteGroup::new(0, Vec::new())?;
                for f in factors {
                    let g = f.build(bound)?;
                    acc = direct_product(&acc, &g, bound)?;
                }
                Ok(acc)
            }
        }
    }
}

fn param(name: &str, params: &[i64], min: i64, max: i64) -> Result<usize, GroupError> {
    match params {
        [n] if (min..=max).contains(n) => Ok(*n as usize),
        [_] => Err(GroupError::InvalidParameters {
            name: name.to_string(),
            reason: "parameter out of range",
        }),
        _ => Err(GroupError::InvalidParameters {
            name: name.to_string(),
            reason: "expected exactly one parameter",
        }),
    }
}

fn no_params(name: &str, params: &[i64]) -> Result<(), GroupError> {
    if params.is_empty() {
        Ok(())
    } else {
        Err(GroupError::InvalidParameters {
            name: name.to_string(),
            reason: "takes no parameters",
        })
    }
}

// Parameters above these limits can never fit under a sane order bound.
const MAX_CYCLIC: i64 = 1 << 20;
const MAX_SYMMETRIC: i64 = 12;

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn family_order(name: &str, params: &[i64]) -> Result<usize, GroupError> {
    match name {
        "cyclic" => param(name, params, 1, MAX_CYCLIC),
        "dihedral" => param(name, params, 1, MAX_CYCLIC).map(|m| 2 * m),
        "dicyclic" => param(name, params, 1, MAX_CYCLIC).map(|m| 4 * m),
        "symmetric" => param(name, params, 1, MAX_SYMMETRIC).map(factorial),
        "alternating" => {
            param(name, params, 1, MAX_SYMMETRIC).map(|n| if n < 2 { 1 } else { factorial(n) / 2 })
        }
        "klein4" => no_params(name, params).map(|_| 4),
        "sl23" => no_params(name, params).map(|_| 24),
        _ => Err(GroupError::UnknownName(name.to_string())),
    }
}

/// Builds a member of a named family on a faithful permutation representation.
///
/// Families: `cyclic m`, `dihedral m` (order 2m), `dicyclic m` (order 4m),
/// `symmetric n`, `alternating n`, `klein4`, `sl23`.
pub fn make_named_group(
    name: &str,
    params: &[i64],
    bound: usize,
) -> Result<FiniteGroup, GroupError> {
    let order = family_order(name, params)?;
    if order > bound {
        return Err(GroupError::OrderBoundExceeded { bound });
    }
    let (degree, generators) = match name {
        "cyclic" => {
            let m = order;
            (m, vec![cycle(m, 0, m)])
        }
        "dihedral" => {
            let m = order / 2;
            if m >= 3 {
                let reflection: Vec<u32> = (0..m).map(|i| ((m - i) % m) as u32).collect();
                (
                    m,
                    vec![cycle(m, 0, m), Permutation::from_images(reflection)?],
                )
            } else {
                // the natural action is not faithful for m < 3
                regular_metacyclic(m, 0)
            }
        }
        "dicyclic" => regular_metacyclic(order / 2, order / 4),
        "symmetric" => {
            let n = param(name, params, 1, MAX_SYMMETRIC)?;
            let gens = if n < 2 {
                Vec::new()
            } else {
                vec![cycle(n, 0, 2), cycle(n, 0, n)]
            };
            (n, gens)
        }
        "alternating" => {
            let n = param(name, params, 1, MAX_SYMMETRIC)?;
            let gens = (2..n)
                .map(|i| Permutation::from_cycles(n, &[&[0, 1, i as u32]]))
                .collect::<Result<_, _>>()?;
            (n, gens)
        }
        "klein4" => (
            4,
            vec![
                Permutation::from_cycles(4, &[&[0, 1], &[2, 3]])?,
                Permutation::from_cycles(4, &[&[0, 2], &[1, 3]])?,
            ],
        ),
        "sl23" => sl23_on_vectors(),
        _ => unreachable!("family_order rejects unknown names"),
    };
    let group = FiniteGroup::with_bound(degree, generators, bound)?;
    if group.order() != order {
        return Err(GroupError::UnexpectedOrder {
            name: name.to_string(),
            expected: order,
            found: group.order(),
        });
    }
    Ok(group)
}

/// The cycle `(start, start+1, …, start+len-1)` on `degree` points.
fn cycle(degree: usize, start: usize, len: usize) -> Permutation {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for i in 0..len {
        images[start + i] = (start + (i + 1) % len) as u32;
    }
    Permutation { images }
}

/// Right-regular action of `<a, x | a^n, x^2 = a^shift, x^{-1} a x = a^{-1}>`.
///
/// With `n = 2m, shift = m` this is the dicyclic group of order 4m; with
/// `shift = 0` it is the dihedral group of order 2n. Elements `a^k x^j` sit
/// at index `k + n·j`.
fn regular_metacyclic(n: usize, shift: usize) -> (usize, Vec<Permutation>) {
    let idx = |k: usize, j: usize| (k % n + n * j) as u32;
    let mut by_a = vec![0u32; 2 * n];
    let mut by_x = vec![0u32; 2 * n];
    for k in 0..n {
        // (a^k) a = a^{k+1};  (a^k x) a = a^{k-1} x
        by_a[idx(k, 0) as usize] = idx(k + 1, 0);
        by_a[idx(k, 1) as usize] = idx(k + n - 1, 1);
        // (a^k) x = a^k x;    (a^k x) x = a^{k+shift}
        by_x[idx(k, 0) as usize] = idx(k, 1);
        by_x[idx(k, 1) as usize] = idx(k + shift, 0);
    }
    (
        2 * n,
        vec![Permutation { images: by_a }, Permutation { images: by_x }],
    )
}

/// SL(2,3) acting on the eight nonzero vectors of F_3².
fn sl23_on_vectors() -> (usize, Vec<Permutation>) {
    let vectors: Vec<(u32, u32)> = (0..3)
        .flat_map(|x| (0..3).map(move |y| (x, y)))
        .filter(|&v| v != (0, 0))
        .collect();
    let act = |m: [[u32; 2]; 2]| {
        let images = vectors
            .iter()
            .map(|&(x, y)| {
                let w = (
                    (m[0][0] * x + m[0][1] * y) % 3,
                    (m[1][0] * x + m[1][1] * y) % 3,
                );
                vectors.iter().position(|&v| v == w).unwrap() as u32
            })
            .collect();
        Permutation { images }
    };
    (8, vec![act([[0, 2], [1, 0]]), act([[1, 1], [0, 1]])])
}

/// A named entry of the built-in catalog.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: String,
    pub spec: GroupSpec,
    pub order: usize,
}

/// The built-in catalog used by batch verification.
///
/// Spans cyclic, dihedral, dicyclic, symmetric and alternating families,
/// the Klein four group, SL(2,3) and a range of direct products. It contains
/// the pairs `dihedral(4l)` / `dicyclic(2l)` of order `8l` for `l = 1..6`.
/// The trivial group is left out, so an order bound of 1 selects nothing.
pub fn default_catalog() -> Vec<CatalogEntry> {
    let n = GroupSpec::named;
    let mut specs: Vec<GroupSpec> = Vec::new();
    specs.extend((2..=12).map(|m| n("cyclic", &[m])));
    specs.extend((3..=12).chain([16, 20, 24]).map(|m| n("dihedral", &[m])));
    specs.extend((2..=12).map(|m| n("dicyclic", &[m])));
    specs.extend((2..=6).map(|k| n("symmetric", &[k])));
    specs.extend((3..=6).map(|k| n("alternating", &[k])));
    specs.push(n("klein4", &[]));
    specs.push(n("sl23", &[]));
    let products: [&[GroupSpec]; 16] = [
        &[n("cyclic", &[2]), n("cyclic", &[2])],
        &[n("cyclic", &[2]), n("cyclic", &[2]), n("cyclic", &[2])],
        &[n("cyclic", &[2]), n("cyclic", &[4])],
        &[n("cyclic", &[3]), n("cyclic", &[3])],
        &[n("symmetric", &[3]), n("cyclic", &[2])],
        &[n("dicyclic", &[2]), n("cyclic", &[3])],
        &[n("dicyclic", &[2]), n("cyclic", &[2])],
        &[n("dihedral", &[4]), n("cyclic", &[2])],
        &[n("alternating", &[4]), n("cyclic", &[2])],
        &[n("sl23", &[]), n("cyclic", &[2])],
        &[n("symmetric", &[4]), n("cyclic", &[2])],
        &[n("symmetric", &[3]), n("symmetric", &[3])],
        &[n("dicyclic", &[2]), n("dicyclic", &[2])],
        &[n("alternating", &[5]), n("cyclic", &[2])],
        &[n("sl23", &[]), n("cyclic", &[3])],
        &[n("alternating", &[4]), n("alternating", &[4])],
    ];
    specs.extend(products.iter().map(|fs| GroupSpec::product(fs.to_vec())));
    // larger entries: many classes (the second exceeds the exhaustive
    // root-scan threshold) and one of order close to the desk-scale limit
    specs.push(n("dihedral", &[128]));
    specs.push(n("dicyclic", &[120]));
    specs.push(GroupSpec::product(vec![
        n("symmetric", &[5]),
        n("cyclic", &[2]),
    ]));
    specs
        .into_iter()
        .map(|spec| {
            let order = spec
                .declared_order()
                .expect("catalog entries have known orders");
            CatalogEntry {
                id: spec.id(),
                spec,
                order,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::DEFAULT_ORDER_BOUND;

    fn build(name: &str, params: &[i64]) -> FiniteGroup {
        make_named_group(name, params, DEFAULT_ORDER_BOUND).unwrap()
    }

    #[test]
    fn family_orders() {
        assert_eq!(build("cyclic", &[6]).order(), 6);
        assert_eq!(build("dihedral", &[4]).order(), 8);
        assert_eq!(build("dihedral", &[1]).order(), 2);
        assert_eq!(build("dihedral", &[2]).order(), 4);
        assert_eq!(build("dicyclic", &[1]).order(), 4);
        assert_eq!(build("dicyclic", &[2]).order(), 8);
        assert_eq!(build("symmetric", &[4]).order(), 24);
        assert_eq!(build("alternating", &[5]).order(), 60);
        assert_eq!(build("alternating", &[2]).order(), 1);
        assert_eq!(build("klein4", &[]).order(), 4);
        assert_eq!(build("sl23", &[]).order(), 24);
    }

    #[test]
    fn quaternion_has_unique_involution() {
        // brute force over the enumerated elements
        let q8 = build("dicyclic", &[2]);
        let involutions = (0..q8.order())
            .filter(|&g| q8.element_order(g) == 2)
            .count();
        assert_eq!(involutions, 1);
        assert_eq!(q8.exponent(), 4);
        assert_eq!(q8.conjugacy_classes().len(), 5);
        assert_eq!(q8.center().len(), 2);
        let d8 = build("dihedral", &[4]);
        let involutions = (0..d8.order())
            .filter(|&g| d8.element_order(g) == 2)
            .count();
        assert_eq!(involutions, 5);
    }

    #[test]
    fn sl23_center_is_minus_identity() {
        let g = build("sl23", &[]);
        assert_eq!(g.center().len(), 2);
        assert_eq!(g.conjugacy_classes().len(), 7);
    }

    #[test]
    fn products() {
        let spec = GroupSpec::product(vec![
            GroupSpec::named("cyclic", &[2]),
            GroupSpec::named("cyclic", &[3]),
        ]);
        assert_eq!(spec.build(DEFAULT_ORDER_BOUND).unwrap().order(), 6);
        let v = GroupSpec::product(vec![
            GroupSpec::named("cyclic", &[2]),
            GroupSpec::named("cyclic", &[2]),
        ])
        .build(DEFAULT_ORDER_BOUND)
        .unwrap();
        assert_eq!((v.order(), v.exponent()), (4, 2));
        let s3c2 = GroupSpec::product(vec![
            GroupSpec::named("symmetric", &[3]),
            GroupSpec::named("cyclic", &[2]),
        ]);
        assert_eq!(s3c2.build(DEFAULT_ORDER_BOUND).unwrap().order(), 12);
        let q8c3 = GroupSpec::product(vec![
            GroupSpec::named("dicyclic", &[2]),
            GroupSpec::named("cyclic", &[3]),
        ])
        .build(DEFAULT_ORDER_BOUND)
        .unwrap();
        assert_eq!(q8c3.center().len(), 6);
        assert_eq!(q8c3.exponent(), 12);
    }

    #[test]
    fn errors() {
        assert_eq!(
            make_named_group("frobenius", &[5], 100).unwrap_err(),
            GroupError::UnknownName("frobenius".into())
        );
        assert!(matches!(
            make_named_group("cyclic", &[0], 100),
            Err(GroupError::InvalidParameters { .. })
        ));
        assert!(matches!(
            make_named_group("cyclic", &[3, 4], 100),
            Err(GroupError::InvalidParameters { .. })
        ));
        assert!(matches!(
            make_named_group("klein4", &[1], 100),
            Err(GroupError::InvalidParameters { .. })
        ));
        assert_eq!(
            make_named_group("symmetric", &[6], 100).unwrap_err(),
            GroupError::OrderBoundExceeded { bound: 100 }
        );
        let big = GroupSpec::product(vec![
            GroupSpec::named("symmetric", &[5]),
            GroupSpec::named("symmetric", &[5]),
        ]);
        assert_eq!(
            big.build(1000).unwrap_err(),
            GroupError::OrderBoundExceeded { bound: 1000 }
        );
    }

    #[test]
    fn catalog_is_well_formed() {
        let cat = default_catalog();
        assert!(cat.len() >= 40);
        assert!(cat.iter().all(|e| e.order > 1));
        let mut ids: Vec<&str> = cat.iter().map(|e| e.id.as_str()).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), cat.len(), "catalog ids are unique");
        for l in 1..=6 {
            assert!(cat
                .iter()
                .any(|e| e.spec == GroupSpec::named("dihedral", &[4 * l])));
            assert!(cat
                .iter()
                .any(|e| e.spec == GroupSpec::named("dicyclic", &[2 * l])));
        }
    }

    #[test]
    fn catalog_orders_match_enumeration() {
        for entry in default_catalog().iter().filter(|e| e.order <= 128) {
            let g = entry.spec.build(DEFAULT_ORDER_BOUND).unwrap();
            assert_eq!(g.order(), entry.order, "{}", entry.id);
        }
    }
}
