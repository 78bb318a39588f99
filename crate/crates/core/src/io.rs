//! JSON file formats for algebras and modules.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::Hints;
use crate::{Alg, Algebra, Config, Error, Field, FieldSpec, Matrix, Module, QuiverSpec, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldJson {
    pub char: u64,
}

impl FieldJson {
    pub fn spec(&self) -> Result<FieldSpec> {
        FieldSpec::from_char(self.char)
    }
}

/// Sparse structure constants: `b_i b_j = Σ value · b_k` for rows `[i, j, k, value]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureConstants {
    pub dim: usize,
    pub labels: Vec<String>,
    pub table: Vec<(usize, usize, usize, Value)>,
    pub unit: Vec<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quiver: Option<QuiverSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure_constants: Option<StructureConstants>,
}

impl AlgebraJson {
    pub fn parse(text: &str) -> Result<Self> {
        let a: AlgebraJson = serde_json::from_str(text)?;
        match (&a.quiver, &a.structure_constants) {
            (Some(_), None) | (None, Some(_)) => Ok(a),
            _ => Err(Error::Input("exactly one of 'quiver' and 'structure_constants' is required".into())),
        }
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn field_spec(&self) -> Result<Option<FieldSpec>> {
        self.field.map(|f| f.spec()).transpose()
    }

    pub fn build<K: Field>(&self, field: &K, cfg: &Config) -> Result<Alg<K>> {
        if let Some(q) = &self.quiver {
            return Algebra::from_quiver(q, field, cfg);
        }
        let sc = self.structure_constants.as_ref().expect("validated on parse");
        let d = sc.dim;
        if sc.labels.len() != d || sc.unit.len() != d {
            return Err(Error::Shape(format!("structure constants of dimension {d} need {d} labels and unit entries")));
        }
        let mut mult = vec![Vec::new(); d * d];
        for (row, (i, j, k, v)) in sc.table.iter().enumerate() {
            if *i >= d || *j >= d || *k >= d {
                return Err(Error::Input(format!("table row {row}: index out of range")));
            }
            mult[i * d + j].push((*k, field.from_json(v)?));
        }
        let unit = sc.unit.iter().map(|v| field.from_json(v)).collect::<Result<Vec<_>>>()?;
        Algebra::from_table(field, sc.labels.clone(), mult, unit, Hints::default(), cfg)
    }

    /// Quiver form when available, structure constants otherwise.
    pub fn from_algebra<K: Field>(a: &Alg<K>) -> Self {
        let field = Some(FieldJson { char: a.field().characteristic() });
        if let Some(q) = a.quiver() {
            return AlgebraJson { field, quiver: Some(q.clone()), structure_constants: None };
        }
        let k = a.field();
        let d = a.dim();
        let mut table = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (kk, v) in a.product(i, j) {
                    table.push((i, j, *kk, k.to_json(v)));
                }
            }
        }
        let sc = StructureConstants {
            dim: d,
            labels: a.labels().to_vec(),
            table,
            unit: a.unit().iter().map(|v| k.to_json(v)).collect(),
        };
        AlgebraJson { field, quiver: None, structure_constants: Some(sc) }
    }
}

type Rows = Vec<Vec<Value>>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleJson {
    /// Path or inline algebra; informational when the algebra is supplied separately.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<BTreeMap<String, Rows>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_dims: Option<BTreeMap<String, usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arrow_maps: Option<BTreeMap<String, Rows>>,
}

fn matrix_from_rows<K: Field>(k: &K, rows: &Rows, nrows: usize, ncols: usize, what: &str) -> Result<Matrix<K>> {
    if rows.len() != nrows || rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::Shape(format!("{what}: expected a {nrows}×{ncols} matrix")));
    }
    let rows: Vec<Vec<K::Elem>> =
        rows.iter().map(|r| r.iter().map(|v| k.from_json(v)).collect::<Result<_>>()).collect::<Result<_>>()?;
    Ok(Matrix::from_rows(k, ncols, &rows))
}

fn matrix_to_rows<K: Field>(m: &Matrix<K>) -> Rows {
    let k = m.field();
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| k.to_json(m.get(i, j))).collect()).collect()
}

impl ModuleJson {
    pub fn parse(text: &str) -> Result<Self> {
        let m: ModuleJson = serde_json::from_str(text)?;
        match (&m.action, &m.vertex_dims) {
            (Some(_), None) | (None, Some(_)) => Ok(m),
            _ => Err(Error::Input("exactly one of 'action' and 'vertex_dims' is required".into())),
        }
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// The algebra named by the `algebra` field, resolved against `base`.
    pub fn algebra_spec(&self, base: &Path) -> Result<Option<AlgebraJson>> {
        match &self.algebra {
            None => Ok(None),
            Some(Value::String(p)) => AlgebraJson::read(&base.join(p)).map(Some),
            Some(v) => {
                let a: AlgebraJson = serde_json::from_value(v.clone())?;
                Ok(Some(a))
            }
        }
    }

    pub fn build<K: Field>(&self, a: &Alg<K>) -> Result<Module<K>> {
        let k = a.field();
        if let Some(dims) = &self.vertex_dims {
            let q = a.quiver().ok_or_else(|| Error::Input("quiver form needs a quiver algebra".into()))?;
            let mut vd = vec![0; a.num_vertices()];
            for (lab, d) in dims {
                let v = a.vertex_index(lab).ok_or_else(|| Error::Input(format!("unknown vertex '{lab}'")))?;
                vd[v] = *d;
            }
            let mut maps = Vec::new();
            for (name, rows) in self.arrow_maps.iter().flatten() {
                let arrow = q
                    .arrows
                    .iter()
                    .find(|ar| &ar.name == name)
                    .ok_or_else(|| Error::Input(format!("unknown arrow '{name}'")))?;
                let (s, t) = (a.vertex_index(&arrow.from).unwrap(), a.vertex_index(&arrow.to).unwrap());
                maps.push((name.clone(), matrix_from_rows(k, rows, vd[t], vd[s], &format!("arrow '{name}'"))?));
            }
            return Module::from_representation(a, &vd, &maps);
        }
        let action = self.action.as_ref().expect("validated on parse");
        let n = action.values().next().map_or(0, |r| r.len());
        let mut mats = Vec::new();
        for lab in a.labels() {
            let rows = action.get(lab).ok_or_else(|| Error::Input(format!("missing action of basis element '{lab}'")))?;
            mats.push(matrix_from_rows(k, rows, n, n, &format!("action of '{lab}'"))?);
        }
        if action.len() != a.dim() {
            return Err(Error::Input("action given for unknown basis labels".into()));
        }
        Module::from_action(a, &mats)
    }

    /// Quiver form when available, full action otherwise.
    pub fn from_module<K: Field>(m: &Module<K>) -> Self {
        let a = m.algebra();
        if let Some(q) = a.quiver() {
            let vertex_dims = a.vertex_labels().iter().cloned().zip(m.dims().iter().copied()).collect();
            let pres = a.presentation();
            let arrow_maps = q
                .arrows
                .iter()
                .map(|ar| {
                    let gi = pres.generator_index(&ar.name).expect("arrow generator");
                    (ar.name.clone(), matrix_to_rows(m.act(gi)))
                })
                .collect();
            return ModuleJson { algebra: None, action: None, vertex_dims: Some(vertex_dims), arrow_maps: Some(arrow_maps) };
        }
        let action = a
            .labels()
            .iter()
            .enumerate()
            .map(|(i, lab)| (lab.clone(), matrix_to_rows(&m.act_elem(&a.basis_vec(i)))))
            .collect();
        ModuleJson { algebra: None, action: Some(action), vertex_dims: None, arrow_maps: None }
    }
}
