//! Named parameter storage with gradient accumulators.

use crate::diffcore::tensor::Tensor;
use crate::error::{Error, Result};
use std::collections::HashMap;

/// Ordered map from parameter name to value and gradient accumulator.
/// Iteration order is insertion order, stable across save/load.
#[derive(Debug, Clone, Default)]
pub struct ParamStore {
    names: Vec<String>,
    index: HashMap<String, usize>,
    values: Vec<Tensor>,
    grads: Vec<Tensor>,
}

impl ParamStore {
    pub fn new() -> Self {
        Self::default()
    }

    /// Register a parameter; names must be unique.
    pub fn register(&mut self, name: impl Into<String>, value: Tensor) -> Result<()> {
        let name = name.into();
        if self.index.contains_key(&name) {
            return Err(Error::DuplicateParam(name));
        }
        let grad = Tensor::zeros(value.shape());
        self.index.insert(name.clone(), self.values.len());
        self.names.push(name);
        self.values.push(value);
        self.grads.push(grad);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Total number of scalar parameters.
    pub fn num_scalars(&self) -> usize {
        self.values.iter().map(Tensor::numel).sum()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index.get(name).copied().ok_or_else(|| Error::UnknownParam(name.to_string()))
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn value(&self, name: &str) -> Result<&Tensor> {
        Ok(&self.values[self.index_of(name)?])
    }

    pub fn value_mut(&mut self, name: &str) -> Result<&mut Tensor> {
        let i = self.index_of(name)?;
        Ok(&mut self.values[i])
    }

    pub fn value_at(&self, idx: usize) -> &Tensor {
        &self.values[idx]
    }

    pub fn value_at_mut(&mut self, idx: usize) -> &mut Tensor {
        &mut self.values[idx]
    }

    pub fn grad(&self, name: &str) -> Result<&Tensor> {
        Ok(&self.grads[self.index_of(name)?])
    }

    pub fn grad_at(&self, idx: usize) -> &Tensor {
        &self.grads[idx]
    }

    /// Add `delta` into the gradient accumulator at `idx`.
    pub fn accumulate_grad(&mut self, idx: usize, delta: &Tensor) -> Result<()> {
        let g = &mut self.grads[idx];
        if g.shape() != delta.shape() {
            return Err(Error::ShapeMismatch {
                op: "ParamStore::accumulate_grad",
                detail: format!(
                    "parameter '{}' has shape {:?}, gradient {:?}",
                    self.names[idx],
                    g.shape(),
                    delta.shape()
                ),
            });
        }
        for (a, b) in g.data_mut().iter_mut().zip(delta.data()) {
            *a += b;
        }
        Ok(())
    }

    pub fn zero_grads(&mut self) {
        for g in &mut self.grads {
            g.fill(0.0);
        }
    }

    /// Parameters in registration order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &Tensor)> {
        self.names.iter().map(String::as_str).zip(self.values.iter())
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicate_names_rejected() {
        let mut s = ParamStore::new();
        s.register("w", Tensor::zeros(&[2])).unwrap();
        assert!(s.register("w", Tensor::zeros(&[2])).is_err());
    }

    #[test]
    fn iteration_order_is_registration_order() {
        let mut s = ParamStore::new();
        s.register("b", Tensor::zeros(&[1])).unwrap();
        s.register("a", Tensor::zeros(&[1])).unwrap();
        let names: Vec<&str> = s.names().collect();
        assert_eq!(names, vec!["b", "a"]);
    }

    #[test]
    fn grad_shape_tracks_value_shape() {
        let mut s = ParamStore::new();
        s.register("w", Tensor::zeros(&[3, 4])).unwrap();
        assert_eq!(s.grad("w").unwrap().shape(), &[3, 4]);
        assert!(s.accumulate_grad(0, &Tensor::zeros(&[4, 3])).is_err());
    }
}
