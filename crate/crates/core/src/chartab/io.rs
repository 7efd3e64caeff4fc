//! Character table interchange:
//! `{"group": …, "e": e, "classes": [{"rep": word, "size": n}…],
//!   "powermap": {k: [class…]}, "chars": [[value…]…]}`
//! with class representatives as words in the group generators.
//!
//! Import re-derives the canonical class order, aligns the file's columns
//! to it, and rejects any table failing the exact orthogonality relations.

use super::CharTable;
use crate::bounds::Bounds;
use crate::cyclotomic::{CycNum, CycNumJson};
use crate::error::{Error, Result};
use crate::perm::GroupJson;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassJson {
    pub rep: Vec<u32>,
    pub size: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableJson {
    pub group: GroupJson,
    pub e: u64,
    pub classes: Vec<ClassJson>,
    pub powermap: BTreeMap<String, Vec<usize>>,
    pub chars: Vec<Vec<CycNumJson>>,
}

pub fn table_to_json(table: &CharTable) -> TableJson {
    let r = table.len();
    let classes = (0..r)
        .map(|j| ClassJson {
            rep: table
                .elements()
                .word(table.classes().class(j).rep_id)
                .to_vec(),
            size: table.class_size(j),
        })
        .collect();
    let mut powermap = BTreeMap::new();
    for k in crate::arith::divisors(table.exponent()) {
        let map: Vec<usize> = (0..r).map(|j| table.class_power(j, k)).collect();
        powermap.insert(k.to_string(), map);
    }
    let chars = (0..r)
        .map(|row| {
            (0..r)
                .map(|j| CycNumJson::from_value(table.value(row, j)))
                .collect()
        })
        .collect();
    TableJson {
        group: GroupJson::from_group(table.group()),
        e: table.exponent(),
        classes,
        powermap,
        chars,
    }
}

pub fn table_from_json(json: TableJson, bounds: &Bounds) -> Result<CharTable> {
    let group = json.group.into_group()?;
    let classes = group.conjugacy_classes(bounds)?;
    let elements = group.elements(bounds)?;
    let r = classes.len();
    if json.classes.len() != r {
        return Err(Error::invalid(format!(
            "file lists {} classes, group has {r}",
            json.classes.len()
        )));
    }
    if json.chars.len() != r {
        return Err(Error::invalid("row count differs from class count"));
    }
    let exponent = classes.exponent();
    if json.e != exponent {
        return Err(Error::invalid(format!(
            "file exponent {} differs from group exponent {exponent}",
            json.e
        )));
    }

    // align file columns with the canonical class order
    let mut canonical_of_file = vec![usize::MAX; r];
    let mut used = vec![false; r];
    for (t, cj) in json.classes.iter().enumerate() {
        let rep = group.evaluate_word(&cj.rep)?;
        let ci = group.class_of(&rep, bounds)?;
        if used[ci] {
            return Err(Error::invalid("two class representatives are conjugate"));
        }
        if classes.class(ci).size != cj.size {
            return Err(Error::invalid(format!(
                "class size mismatch for file class {t}"
            )));
        }
        used[ci] = true;
        canonical_of_file[t] = ci;
    }

    let mut values: Vec<Vec<CycNum>> = Vec::with_capacity(r);
    for row in json.chars {
        if row.len() != r {
            return Err(Error::invalid("ragged character row"));
        }
        let mut out = vec![CycNum::zero(1); r];
        for (t, vj) in row.into_iter().enumerate() {
            let v = vj.into_value()?;
            if exponent % v.conductor() != 0 {
                return Err(Error::invalid(
                    "character value conductor does not divide the group exponent",
                ));
            }
            out[canonical_of_file[t]] = v.promoted(exponent);
        }
        values.push(out);
    }

    // degrees must be positive integers at the identity class
    let mut degrees = Vec::with_capacity(r);
    for row in &values {
        let d = row[0]
            .as_integer()
            .ok_or_else(|| Error::invalid("degree is not an integer"))?;
        if d <= 0.into() {
            return Err(Error::invalid("degree is not positive"));
        }
        let digits = d.to_u64_digits().1;
        degrees.push(digits.first().copied().unwrap_or(0));
    }

    // canonical row order
    let mut order_idx: Vec<usize> = (0..r).collect();
    order_idx.sort_by(|&a, &b| {
        degrees[a].cmp(&degrees[b]).then_with(|| {
            for j in 0..r {
                match values[a][j].cmp_canonical(&values[b][j]) {
                    std::cmp::Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            std::cmp::Ordering::Equal
        })
    });
    let values: Vec<Vec<CycNum>> = order_idx.iter().map(|&i| values[i].clone()).collect();
    let degrees: Vec<u64> = order_idx.iter().map(|&i| degrees[i]).collect();

    let inverse_class: Vec<usize> = (0..r)
        .map(|j| {
            let rep = elements.perm(classes.class(j).rep_id);
            classes.class_of_id(elements.id_of(&rep.inverse()).expect("inverse in group"))
        })
        .collect();

    let table = CharTable::assemble(
        group.clone(),
        classes,
        elements,
        exponent,
        values,
        degrees,
        inverse_class,
        None,
    );

    // validate the file's powermap entries against recomputed ones
    for (key, map) in &json.powermap {
        let k: u64 = key
            .parse()
            .map_err(|_| Error::invalid("powermap key is not an integer"))?;
        if exponent % k != 0 {
            return Err(Error::invalid("powermap key does not divide the exponent"));
        }
        if map.len() != r {
            return Err(Error::invalid("powermap row has wrong length"));
        }
        for (t, &target) in map.iter().enumerate() {
            if target >= r {
                return Err(Error::invalid("powermap entry out of range"));
            }
            if table.class_power(canonical_of_file[t], k) != canonical_of_file[target] {
                return Err(Error::invalid("powermap entry contradicts the group"));
            }
        }
    }

    table
        .verify_orthogonality()
        .map_err(|e| Error::invalid(format!("imported table rejected: {e}")))?;
    Ok(table)
}
