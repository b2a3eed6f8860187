//! Rectangular entity × year × variable panel and the pure transforms on it.

use crate::error::{Error, Result};
use crate::scalar::{mean, Real};
use std::collections::HashSet;

/// An entity removed from the panel, with the reason it was removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exclusion {
    pub entity: String,
    pub reason: String,
}

/// Contiguous block of years `[start, start + len)` as offsets into the panel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Run {
    pub start: usize,
    pub len: usize,
}

impl Run {
    pub fn end(&self) -> usize {
        self.start + self.len
    }
}

/// Immutable panel of observations.
///
/// Entities are kept in sorted order regardless of load order, so every
/// downstream reduction sees the same sequence. Years form a contiguous range.
#[derive(Debug, Clone, PartialEq)]
pub struct PanelDataset<T> {
    entities: Vec<String>,
    first_year: i32,
    n_years: usize,
    variables: Vec<String>,
    values: Vec<T>,
    mask: Vec<bool>,
    exclusions: Vec<Exclusion>,
}

impl<T: Real> PanelDataset<T> {
    /// Builds a panel from dense `(entity, year, variable)`-ordered buffers.
    pub fn new(
        entities: Vec<String>,
        first_year: i32,
        n_years: usize,
        variables: Vec<String>,
        values: Vec<T>,
        mask: Vec<bool>,
    ) -> Result<Self> {
        let expected = entities.len() * n_years * variables.len();
        if values.len() != expected || mask.len() != expected {
            return Err(Error::ShapeMismatch(format!(
                "panel buffers hold {} values and {} mask cells, expected {expected}",
                values.len(),
                mask.len()
            )));
        }
        if n_years == 0 {
            return Err(Error::InvalidPanel("empty year range".into()));
        }
        check_unique(&entities, "entity")?;
        check_unique(&variables, "variable")?;

        let nv = variables.len();
        let block = n_years * nv;
        let mut order: Vec<usize> = (0..entities.len()).collect();
        order.sort_by(|&a, &b| entities[a].cmp(&entities[b]));
        let mut sorted_values = Vec::with_capacity(expected);
        let mut sorted_mask = Vec::with_capacity(expected);
        for &e in &order {
            sorted_values.extend_from_slice(&values[e * block..(e + 1) * block]);
            sorted_mask.extend_from_slice(&mask[e * block..(e + 1) * block]);
        }
        let entities = order.iter().map(|&e| entities[e].clone()).collect();
        Ok(Self {
            entities,
            first_year,
            n_years,
            variables,
            values: sorted_values,
            mask: sorted_mask,
            exclusions: Vec::new(),
        })
    }

    /// Builds a panel by evaluating `f(entity, year, variable)` on every cell.
    pub fn from_fn<F>(
        entities: Vec<String>,
        first_year: i32,
        n_years: usize,
        variables: Vec<String>,
        mut f: F,
    ) -> Result<Self>
    where
        F: FnMut(usize, usize, usize) -> Option<T>,
    {
        let nv = variables.len();
        let mut values = Vec::with_capacity(entities.len() * n_years * nv);
        let mut mask = Vec::with_capacity(values.capacity());
        for e in 0..entities.len() {
            for t in 0..n_years {
                for v in 0..nv {
                    match f(e, t, v) {
                        Some(x) if x.is_finite() => {
                            values.push(x);
                            mask.push(true);
                        }
                        _ => {
                            values.push(T::zero());
                            mask.push(false);
                        }
                    }
                }
            }
        }
        Self::new(entities, first_year, n_years, variables, values, mask)
    }

    pub fn entities(&self) -> &[String] {
        &self.entities
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn n_entities(&self) -> usize {
        self.entities.len()
    }

    pub fn n_years(&self) -> usize {
        self.n_years
    }

    pub fn first_year(&self) -> i32 {
        self.first_year
    }

    pub fn last_year(&self) -> i32 {
        self.first_year + self.n_years as i32 - 1
    }

    pub fn year(&self, t: usize) -> i32 {
        self.first_year + t as i32
    }

    pub fn years(&self) -> impl Iterator<Item = i32> + '_ {
        (0..self.n_years).map(|t| self.year(t))
    }

    pub fn exclusions(&self) -> &[Exclusion] {
        &self.exclusions
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.variables
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn entity_index(&self, name: &str) -> Result<usize> {
        self.entities
            .binary_search_by(|e| e.as_str().cmp(name))
            .map_err(|_| Error::UnknownEntity(name.to_string()))
    }

    pub fn has_variable(&self, name: &str) -> bool {
        self.variables.iter().any(|v| v == name)
    }

    #[inline]
    fn idx(&self, e: usize, t: usize, v: usize) -> usize {
        (e * self.n_years + t) * self.variables.len() + v
    }

    /// Value at `(entity, year offset, variable)` indices, `None` if masked.
    #[inline]
    pub fn value(&self, e: usize, t: usize, v: usize) -> Option<T> {
        let i = self.idx(e, t, v);
        self.mask[i].then(|| self.values[i])
    }

    pub fn get(&self, entity: &str, year: i32, variable: &str) -> Option<T> {
        let e = self.entity_index(entity).ok()?;
        let v = self.var_index(variable).ok()?;
        let t = usize::try_from(year - self.first_year).ok()?;
        if t >= self.n_years {
            return None;
        }
        self.value(e, t, v)
    }

    /// Longest contiguous run of years in which every listed variable is observed.
    /// Ties go to the earliest run.
    pub fn observed_run(&self, e: usize, vars: &[usize]) -> Option<Run> {
        let mut best: Option<Run> = None;
        let mut start = None;
        for t in 0..=self.n_years {
            let ok = t < self.n_years && vars.iter().all(|&v| self.mask[self.idx(e, t, v)]);
            match (ok, start) {
                (true, None) => start = Some(t),
                (false, Some(s)) => {
                    let run = Run { start: s, len: t - s };
                    if best.is_none_or(|b| run.len > b.len) {
                        best = Some(run);
                    }
                    start = None;
                }
                _ => {}
            }
        }
        best
    }

    /// Values of variable `v` for entity `e` over a run.
    pub fn run_values(&self, e: usize, v: usize, run: Run) -> Vec<T> {
        (run.start..run.end())
            .map(|t| self.values[self.idx(e, t, v)])
            .collect()
    }

    /// Series view over the longest observed run of one variable.
    pub fn series(&self, entity: &str, variable: &str) -> Result<SeriesView<T>> {
        let e = self.entity_index(entity)?;
        let v = self.var_index(variable)?;
        self.entity_series(e, v)
            .ok_or_else(|| Error::InsufficientData(format!("{entity}/{variable} has no observations")))
    }

    pub fn entity_series(&self, e: usize, v: usize) -> Option<SeriesView<T>> {
        let run = self.observed_run(e, &[v])?;
        Some(SeriesView {
            entity: self.entities[e].clone(),
            variable: self.variables[v].clone(),
            data: self.run_values(e, v, run),
            first_year: self.year(run.start),
        })
    }

    /// Returns a copy with `name` added (or replaced) using `f(entity, year offset)`.
    pub fn with_variable<F>(&self, name: &str, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> Option<T>,
    {
        let existing = self.variables.iter().position(|v| v == name);
        let mut variables = self.variables.clone();
        if existing.is_none() {
            variables.push(name.to_string());
        }
        let nv = variables.len();
        let target = existing.unwrap_or(nv - 1);
        let mut values = Vec::with_capacity(self.n_entities() * self.n_years * nv);
        let mut mask = Vec::with_capacity(values.capacity());
        for e in 0..self.n_entities() {
            for t in 0..self.n_years {
                for v in 0..nv {
                    if v == target {
                        match f(e, t) {
                            Some(x) if x.is_finite() => {
                                values.push(x);
                                mask.push(true);
                            }
                            _ => {
                                values.push(T::zero());
                                mask.push(false);
                            }
                        }
                    } else {
                        let i = self.idx(e, t, v);
                        values.push(self.values[i]);
                        mask.push(self.mask[i]);
                    }
                }
            }
        }
        Self {
            entities: self.entities.clone(),
            first_year: self.first_year,
            n_years: self.n_years,
            variables,
            values,
            mask,
            exclusions: self.exclusions.clone(),
        }
    }

    fn map_variable<F>(&self, variable: &str, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize, T) -> T,
    {
        let v = self.var_index(variable)?;
        let mut out = self.clone();
        for e in 0..self.n_entities() {
            for t in 0..self.n_years {
                let i = self.idx(e, t, v);
                if self.mask[i] {
                    out.values[i] = f(e, t, self.values[i]);
                }
            }
        }
        Ok(out)
    }

    /// Removes the per-entity mean of `variable` over its observed cells.
    pub fn within_demean(&self, variable: &str) -> Result<Self> {
        let v = self.var_index(variable)?;
        let means: Vec<T> = (0..self.n_entities())
            .map(|e| {
                let obs: Vec<T> = (0..self.n_years).filter_map(|t| self.value(e, t, v)).collect();
                mean(&obs)
            })
            .collect();
        self.map_variable(variable, |e, _, x| x - means[e])
    }

    /// Multiplies every observation of `variable` by `factor`.
    pub fn scale(&self, variable: &str, factor: T) -> Result<Self> {
        self.map_variable(variable, |_, _, x| x * factor)
    }

    /// Natural log of `variable`; fails on non-positive observations.
    pub fn log_transform(&self, variable: &str) -> Result<Self> {
        let v = self.var_index(variable)?;
        for e in 0..self.n_entities() {
            for t in 0..self.n_years {
                if let Some(x) = self.value(e, t, v) {
                    if x <= T::zero() {
                        return Err(Error::InvalidPanel(format!(
                            "cannot log non-positive {variable} for {} in {}",
                            self.entities[e],
                            self.year(t)
                        )));
                    }
                }
            }
        }
        self.map_variable(variable, |_, _, x| x.ln())
    }

    /// Fills interior gaps of `variable` by linear interpolation between the
    /// nearest observed neighbours. Leading and trailing gaps stay missing.
    pub fn interpolate_gaps(&self, variable: &str) -> Result<Self> {
        let v = self.var_index(variable)?;
        let mut out = self.clone();
        for e in 0..self.n_entities() {
            let observed: Vec<usize> =
                (0..self.n_years).filter(|&t| self.mask[self.idx(e, t, v)]).collect();
            for w in observed.windows(2) {
                let (a, b) = (w[0], w[1]);
                let (ya, yb) = (self.values[self.idx(e, a, v)], self.values[self.idx(e, b, v)]);
                for t in a + 1..b {
                    let frac = T::count(t - a) / T::count(b - a);
                    let i = self.idx(e, t, v);
                    out.values[i] = ya + (yb - ya) * frac;
                    out.mask[i] = true;
                }
            }
        }
        Ok(out)
    }

    /// Restricts the panel to the years `[start, end]`.
    pub fn select_years(&self, start: i32, end: i32) -> Result<Self> {
        let lo = start.max(self.first_year);
        let hi = end.min(self.last_year());
        if lo > hi {
            return Err(Error::InvalidPanel(format!(
                "year range {start}-{end} does not overlap {}-{}",
                self.first_year,
                self.last_year()
            )));
        }
        let t0 = (lo - self.first_year) as usize;
        let n = (hi - lo + 1) as usize;
        let nv = self.variables.len();
        let mut values = Vec::with_capacity(self.n_entities() * n * nv);
        let mut mask = Vec::with_capacity(values.capacity());
        for e in 0..self.n_entities() {
            let a = self.idx(e, t0, 0);
            let b = a + n * nv;
            values.extend_from_slice(&self.values[a..b]);
            mask.extend_from_slice(&self.mask[a..b]);
        }
        Ok(Self {
            entities: self.entities.clone(),
            first_year: lo,
            n_years: n,
            variables: self.variables.clone(),
            values,
            mask,
            exclusions: self.exclusions.clone(),
        })
    }

    /// Drops entities whose joint observed run over `variables` is shorter
    /// than `min_obs`, recording the reason for each.
    pub fn enforce_min_obs(&self, variables: &[&str], min_obs: usize) -> Result<Self> {
        let vars = variables
            .iter()
            .map(|v| self.var_index(v))
            .collect::<Result<Vec<_>>>()?;
        let keep: Vec<usize> = (0..self.n_entities())
            .filter(|&e| self.observed_run(e, &vars).map_or(0, |r| r.len) >= min_obs)
            .collect();
        let mut exclusions = self.exclusions.clone();
        for e in 0..self.n_entities() {
            if !keep.contains(&e) {
                let got = self.observed_run(e, &vars).map_or(0, |r| r.len);
                let reason = format!(
                    "longest jointly observed run is {got} years, fewer than the required {min_obs}"
                );
                log::warn!("excluding entity {}: {reason}", self.entities[e]);
                exclusions.push(Exclusion {
                    entity: self.entities[e].clone(),
                    reason,
                });
            }
        }
        let mut out = self.subset_entities(&keep);
        out.exclusions = exclusions;
        Ok(out)
    }

    /// Copy restricted to the entity indices in `keep` (ascending).
    pub fn subset_entities(&self, keep: &[usize]) -> Self {
        let block = self.n_years * self.variables.len();
        let mut values = Vec::with_capacity(keep.len() * block);
        let mut mask = Vec::with_capacity(keep.len() * block);
        for &e in keep {
            values.extend_from_slice(&self.values[e * block..(e + 1) * block]);
            mask.extend_from_slice(&self.mask[e * block..(e + 1) * block]);
        }
        Self {
            entities: keep.iter().map(|&e| self.entities[e].clone()).collect(),
            first_year: self.first_year,
            n_years: self.n_years,
            variables: self.variables.clone(),
            values,
            mask,
            exclusions: self.exclusions.clone(),
        }
    }

    /// Converts every value into another scalar type.
    pub fn cast<U: Real>(&self) -> PanelDataset<U> {
        PanelDataset {
            entities: self.entities.clone(),
            first_year: self.first_year,
            n_years: self.n_years,
            variables: self.variables.clone(),
            values: self.values.iter().map(|x| U::lit(x.as_f64())).collect(),
            mask: self.mask.clone(),
            exclusions: self.exclusions.clone(),
        }
    }

    /// True when every cell is observed.
    pub fn is_complete(&self) -> bool {
        self.mask.iter().all(|&m| m)
    }
}

fn check_unique(names: &[String], what: &str) -> Result<()> {
    let mut seen = HashSet::new();
    for n in names {
        if !seen.insert(n.as_str()) {
            return Err(Error::InvalidPanel(format!("duplicate {what} `{n}`")));
        }
    }
    Ok(())
}

/// A gap-free stretch of one variable for one entity.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesView<T> {
    pub entity: String,
    pub variable: String,
    pub data: Vec<T>,
    pub first_year: i32,
}

impl<T: Real> SeriesView<T> {
    pub fn new(data: Vec<T>) -> Self {
        Self {
            entity: String::new(),
            variable: String::new(),
            data,
            first_year: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    /// Last `n` points of the series.
    pub fn tail(&self, n: usize) -> Self {
        let n = n.min(self.len());
        let skip = self.len() - n;
        Self {
            data: self.data[skip..].to_vec(),
            first_year: self.first_year + skip as i32,
            ..self.clone()
        }
    }
}

/// `out[t] = in[t + 1] - in[t]`.
pub fn first_difference<T: Real>(s: &SeriesView<T>) -> Result<SeriesView<T>> {
    if s.len() < 2 {
        return Err(Error::SeriesTooShort {
            needed: 2,
            got: s.len(),
        });
    }
    Ok(SeriesView {
        entity: s.entity.clone(),
        variable: s.variable.clone(),
        data: s.data.windows(2).map(|w| w[1] - w[0]).collect(),
        first_year: s.first_year + 1,
    })
}

/// Series lagged by `k` periods, dated at the period it is paired with:
/// `lag(s, k)` lines up element-wise with `s.tail(len - k)`.
pub fn lag<T: Real>(s: &SeriesView<T>, k: usize) -> Result<SeriesView<T>> {
    if s.len() <= k {
        return Err(Error::SeriesTooShort {
            needed: k + 1,
            got: s.len(),
        });
    }
    Ok(SeriesView {
        entity: s.entity.clone(),
        variable: s.variable.clone(),
        data: s.data[..s.len() - k].to_vec(),
        first_year: s.first_year + k as i32,
    })
}

/// Running sum of `diffs` starting from `initial`; inverse of [`first_difference`].
pub fn integrate<T: Real>(initial: T, diffs: &[T]) -> Vec<T> {
    let mut out = Vec::with_capacity(diffs.len() + 1);
    let mut acc = initial;
    out.push(acc);
    for &d in diffs {
        acc += d;
        out.push(acc);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn view(data: &[f64]) -> SeriesView<f64> {
        SeriesView::new(data.to_vec())
    }

    fn panel(values: &[(&str, Vec<f64>)]) -> PanelDataset<f64> {
        let n = values[0].1.len();
        PanelDataset::from_fn(
            values.iter().map(|(e, _)| e.to_string()).collect(),
            2000,
            n,
            vec!["x".into()],
            |e, t, _| Some(values[e].1[t]),
        )
        .unwrap()
    }

    #[test]
    fn first_difference_examples() {
        assert_eq!(first_difference(&view(&[1.0, 3.0, 6.0, 10.0])).unwrap().data, vec![2.0, 3.0, 4.0]);
        assert_eq!(first_difference(&view(&[5.0, 5.0, 5.0])).unwrap().data, vec![0.0, 0.0]);
        assert!(matches!(
            first_difference(&view(&[1.0])),
            Err(Error::SeriesTooShort { .. })
        ));
    }

    #[test]
    fn first_difference_inverts_cumulative_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let x: Vec<f64> = (0..100).map(|_| rng.random_range(-10.0..10.0)).collect();
        let d = first_difference(&view(&x)).unwrap();
        assert_eq!(d.first_year, 1);
        let back = integrate(x[0], &d.data);
        for (a, b) in back.iter().zip(&x) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn lag_pairs_with_tail() {
        let s = view(&[1.0, 2.0, 3.0, 4.0]);
        let l = lag(&s, 1).unwrap();
        let t = s.tail(3);
        assert_eq!(l.first_year, t.first_year);
        let pairs: Vec<_> = l.data.iter().zip(&t.data).map(|(a, b)| (*a, *b)).collect();
        assert_eq!(pairs, vec![(1.0, 2.0), (2.0, 3.0), (3.0, 4.0)]);
        assert_eq!(lag(&s, 0).unwrap(), s);
        assert!(lag(&s, 4).is_err());
    }

    #[test]
    fn lag_recovers_ar1_coefficient() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let normal = rand_distr::StandardNormal;
        let mut x = vec![0.0f64];
        for _ in 1..500 {
            let e: f64 = rng.sample(normal);
            let next = 0.5 * x.last().unwrap() + e;
            x.push(next);
        }
        let s = view(&x);
        let l = lag(&s, 1).unwrap();
        let y = s.tail(s.len() - 1);
        let design = nalgebra::DMatrix::from_fn(l.len(), 2, |i, j| if j == 0 { 1.0 } else { l.data[i] });
        let fit = crate::regress::ols(&nalgebra::DVector::from_vec(y.data.clone()), &design).unwrap();
        let se = fit.std_errors()[1];
        assert!((fit.coefficients[1] - 0.5).abs() < 3.0 * se);
    }

    #[test]
    fn within_demean_examples() {
        let p = panel(&[("A", vec![1.0, 2.0, 3.0])]);
        let d = p.within_demean("x").unwrap();
        let got: Vec<f64> = (0..3).map(|t| d.value(0, t, 0).unwrap()).collect();
        assert_eq!(got, vec![-1.0, 0.0, 1.0]);

        let z = panel(&[("A", vec![-1.0, 0.0, 1.0])]);
        let dz = z.within_demean("x").unwrap();
        for t in 0..3 {
            assert!((dz.value(0, t, 0).unwrap() - z.value(0, t, 0).unwrap()).abs() < 1e-12);
        }

        let two = panel(&[("A", vec![9.0, 10.0, 11.0]), ("B", vec![-6.0, -4.0, -2.0])]);
        let d2 = two.within_demean("x").unwrap();
        let means: Vec<f64> = (0..2)
            .map(|e| (0..3).map(|t| d2.value(e, t, 0).unwrap()).sum::<f64>() / 3.0)
            .collect();
        for m in &means {
            assert!(m.abs() < 1e-10);
        }
        assert!((means[0] - means[1]).abs() < 1e-12);
        assert!(matches!(two.within_demean("y"), Err(Error::UnknownVariable(_))));
    }

    #[test]
    fn within_demean_keeps_mask() {
        let p = PanelDataset::from_fn(vec!["A".into()], 2000, 4, vec!["x".into()], |_, t, _| {
            (t != 2).then_some(t as f64)
        })
        .unwrap();
        let d = p.within_demean("x").unwrap();
        assert!(d.value(0, 2, 0).is_none());
        let s: f64 = [0, 1, 3].iter().map(|&t| d.value(0, t, 0).unwrap()).sum();
        assert!(s.abs() < 1e-12);
    }

    #[test]
    fn entity_order_is_canonical() {
        let a = panel(&[("B", vec![1.0, 2.0]), ("A", vec![3.0, 4.0])]);
        let b = panel(&[("A", vec![3.0, 4.0]), ("B", vec![1.0, 2.0])]);
        assert_eq!(a, b);
        assert_eq!(a.entities(), &["A".to_string(), "B".to_string()]);
    }

    #[test]
    fn longest_run_is_used_and_short_entities_are_excluded() {
        let p = PanelDataset::from_fn(
            vec!["A".into(), "B".into()],
            1990,
            12,
            vec!["x".into()],
            |e, t, _| match e {
                0 => (t != 3).then_some(t as f64),
                _ => (t < 4).then_some(1.0),
            },
        )
        .unwrap();
        let s = p.series("A", "x").unwrap();
        assert_eq!(s.first_year, 1994);
        assert_eq!(s.len(), 8);
        let kept = p.enforce_min_obs(&["x"], 5).unwrap();
        assert_eq!(kept.entities(), &["A".to_string()]);
        assert_eq!(kept.exclusions().len(), 1);
        assert_eq!(kept.exclusions()[0].entity, "B");
    }

    #[test]
    fn interpolation_fills_interior_gaps_only() {
        let p = PanelDataset::from_fn(vec!["A".into()], 2000, 5, vec!["x".into()], |_, t, _| {
            [None, Some(1.0), None, Some(3.0), None][t]
        })
        .unwrap();
        let q = p.interpolate_gaps("x").unwrap();
        assert_eq!(q.value(0, 2, 0), Some(2.0));
        assert_eq!(q.value(0, 0, 0), None);
        assert_eq!(q.value(0, 4, 0), None);
    }

    #[test]
    fn log_rejects_non_positive() {
        let p = panel(&[("A", vec![1.0, 0.0])]);
        assert!(p.log_transform("x").is_err());
        let q = panel(&[("A", vec![1.0, std::f64::consts::E])]);
        let l = q.log_transform("x").unwrap();
        assert!((l.value(0, 1, 0).unwrap() - 1.0).abs() < 1e-15);
    }

    proptest! {
        #[test]
        fn within_demean_is_idempotent_and_linear(
            a in proptest::collection::vec(-100.0f64..100.0, 6),
            b in proptest::collection::vec(-100.0f64..100.0, 6),
            c in -5.0f64..5.0,
        ) {
            let pa = panel(&[("E1", a[..3].to_vec()), ("E2", a[3..].to_vec())]);
            let pb = panel(&[("E1", b[..3].to_vec()), ("E2", b[3..].to_vec())]);
            let combo: Vec<f64> = a.iter().zip(&b).map(|(x, y)| x + c * y).collect();
            let pc = panel(&[("E1", combo[..3].to_vec()), ("E2", combo[3..].to_vec())]);
            let (da, db, dc) = (
                pa.within_demean("x").unwrap(),
                pb.within_demean("x").unwrap(),
                pc.within_demean("x").unwrap(),
            );
            let dda = da.within_demean("x").unwrap();
            for e in 0..2 {
                for t in 0..3 {
                    let x = da.value(e, t, 0).unwrap();
                    prop_assert!((dda.value(e, t, 0).unwrap() - x).abs() < 1e-9);
                    let lin = x + c * db.value(e, t, 0).unwrap();
                    prop_assert!((dc.value(e, t, 0).unwrap() - lin).abs() < 1e-9);
                }
            }
        }

        #[test]
        fn difference_then_integrate_is_identity(x in proptest::collection::vec(-1e3f64..1e3, 2..60)) {
            let d = first_difference(&view(&x)).unwrap();
            let back = integrate(x[0], &d.data);
            for (a, b) in back.iter().zip(&x) {
                prop_assert!((a - b).abs() < 1e-9);
            }
        }
    }
}
