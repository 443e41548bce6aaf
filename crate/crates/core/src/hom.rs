use crate::error::{Error, Result};
use crate::group::GroupTable;

/// A map between two group tables given by its image sequence.
#[derive(Debug, Clone)]
pub struct GroupHom<'g> {
    domain: &'g GroupTable,
    codomain: &'g GroupTable,
    image: Vec<usize>,
    certified: bool,
}

impl<'g> GroupHom<'g> {
    pub fn new(domain: &'g GroupTable, codomain: &'g GroupTable, image: Vec<usize>) -> Result<Self> {
        if image.len() != domain.order() {
            return Err(Error::Shape(format!(
                "image has {} entries for a domain of order {}",
                image.len(),
                domain.order()
            )));
        }
        if let Some(&x) = image.iter().find(|&&x| x >= codomain.order()) {
            return Err(Error::Shape(format!(
                "image entry {x} outside codomain of order {}",
                codomain.order()
            )));
        }
        Ok(GroupHom {
            domain,
            codomain,
            image,
            certified: false,
        })
    }

    /// Checks `image[a b] = image[a] image[b]` for every pair and marks
    /// the map certified; the first failing pair is the error witness.
    pub fn certify(mut self) -> Result<Self> {
        let (d, c) = (self.domain, self.codomain);
        if self.image[d.identity()] != c.identity() {
            let e = d.identity();
            return Err(Error::NotHomomorphism { a: e, b: e });
        }
        for a in 0..d.order() {
            for b in 0..d.order() {
                if self.image[d.mul(a, b)] != c.mul(self.image[a], self.image[b]) {
                    return Err(Error::NotHomomorphism { a, b });
                }
            }
        }
        self.certified = true;
        Ok(self)
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    pub fn apply(&self, a: usize) -> usize {
        self.image[a]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn domain(&self) -> &GroupTable {
        self.domain
    }

    pub fn codomain(&self) -> &GroupTable {
        self.codomain
    }
}
