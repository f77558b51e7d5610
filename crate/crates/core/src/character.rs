//! Windowed characters: multiplicities indexed by `(μ − λ, energy)`.
//!
//! Weights are recorded by their offset from a reference weight `λ` in
//! simple-root coordinates; windows are boxes in those coordinates.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::root_data::{RootSystem, Weight};

/// A multiplicity, possibly only a lower bound under a truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Mult {
    pub count: u64,
    pub lower_bound: bool,
}

impl Mult {
    pub fn exact(count: u64) -> Self {
        Mult {
            count,
            lower_bound: false,
        }
    }

    pub fn to_json(self) -> Value {
        if self.lower_bound {
            Value::String(format!("≥{}", self.count))
        } else {
            json!(self.count)
        }
    }
}

/// A box `|c_i| ≤ radius` around the reference weight, up to energy `dmax`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub radius: i64,
    pub dmax: u32,
}

impl Window {
    pub fn new(radius: i64, dmax: u32) -> Self {
        Window { radius, dmax }
    }

    pub fn is_empty(&self) -> bool {
        self.radius < 0
    }

    pub fn contains(&self, offset: &[i64]) -> bool {
        offset.iter().all(|c| c.abs() <= self.radius)
    }

    /// All offsets in the box, lexicographically.
    pub fn offsets(&self, rank: usize) -> Vec<Vec<i64>> {
        if self.is_empty() {
            return Vec::new();
        }
        let mut out = vec![Vec::new()];
        for _ in 0..rank {
            out = out
                .into_iter()
                .flat_map(|p: Vec<i64>| {
                    (-self.radius..=self.radius).map(move |c| {
                        let mut v = p.clone();
                        v.push(c);
                        v
                    })
                })
                .collect();
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub lambda: Weight,
    pub cells: BTreeMap<(Vec<i64>, u32), Mult>,
}

impl Character {
    pub fn new(lambda: Weight) -> Self {
        Character {
            lambda,
            cells: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, offset: Vec<i64>, degree: u32, count: u64, lower_bound: bool) {
        if count == 0 {
            return;
        }
        let cell = self.cells.entry((offset, degree)).or_insert(Mult::exact(0));
        cell.count += count;
        cell.lower_bound |= lower_bound;
    }

    pub fn get(&self, offset: &[i64], degree: u32) -> Mult {
        self.cells
            .get(&(offset.to_vec(), degree))
            .copied()
            .unwrap_or(Mult::exact(0))
    }

    /// Cells of one energy degree.
    pub fn degree(&self, d: u32) -> BTreeMap<Vec<i64>, Mult> {
        self.cells
            .iter()
            .filter(|((_, e), _)| *e == d)
            .map(|((o, _), m)| (o.clone(), *m))
            .collect()
    }

    /// Drops cells outside a window.
    pub fn restrict(&self, window: &Window) -> Character {
        Character {
            lambda: self.lambda.clone(),
            cells: self
                .cells
                .iter()
                .filter(|((o, d), _)| window.contains(o) && *d <= window.dmax)
                .map(|(k, v)| (k.clone(), *v))
                .collect(),
        }
    }

    pub fn weight_of(&self, rs: &RootSystem, offset: &[i64]) -> Weight {
        let mut w = self.lambda.clone();
        for (i, &c) in offset.iter().enumerate() {
            if c != 0 {
                w = w.add(
                    &rs.root_weight(&rs.simple_roots[i])
                        .scale(&crate::rational::q(c)),
                );
            }
        }
        w
    }

    pub fn to_json(&self, rs: &RootSystem) -> Value {
        Value::Array(
            self.cells
                .iter()
                .map(|((o, d), m)| json!({"weight": self.weight_of(rs, o).render(), "degree": d, "mult": m.to_json()}))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_boxes() {
        assert_eq!(Window::new(1, 0).offsets(2).len(), 9);
        assert!(Window::new(-1, 0).offsets(2).is_empty());
        assert!(Window::new(2, 0).contains(&[2, -2]));
        assert!(!Window::new(2, 0).contains(&[3, 0]));
    }

    #[test]
    fn accumulation_and_json() {
        let rs = RootSystem::new(2).unwrap();
        let mut c = Character::new(Weight::zero(1));
        c.add(vec![1], 0, 2, false);
        c.add(vec![1], 0, 1, true);
        c.add(vec![0], 0, 0, false);
        assert_eq!(c.cells.len(), 1);
        assert_eq!(
            c.get(&[1], 0),
            Mult {
                count: 3,
                lower_bound: true
            }
        );
        let j = c.to_json(&rs);
        assert_eq!(j[0]["weight"], "2*w1");
        assert_eq!(j[0]["mult"], "≥3");
    }
}
