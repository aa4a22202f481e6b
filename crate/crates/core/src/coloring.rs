use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub type Color = u32;

/// Total vertex coloring with colors in `1..=palette`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<Color>,
    palette: Color,
}

impl Coloring {
    pub fn new(colors: Vec<Color>, palette: Color) -> Result<Coloring> {
        if let Some((v, &c)) = colors
            .iter()
            .enumerate()
            .find(|(_, &c)| c == 0 || c > palette)
        {
            return Err(Error::InvalidColoring(format!(
                "vertex {v} has color {c} outside 1..={palette}"
            )));
        }
        Ok(Coloring { colors, palette })
    }

    /// Palette set to the largest color used.
    pub fn from_colors(colors: Vec<Color>) -> Result<Coloring> {
        let palette = colors.iter().copied().max().unwrap_or(0);
        Coloring::new(colors, palette)
    }

    /// Every vertex gets its own color `v + 1`.
    pub fn rainbow(order: usize) -> Coloring {
        Coloring {
            colors: (1..=order as Color).collect(),
            palette: order as Color,
        }
    }

    pub fn uniform(order: usize, color: Color) -> Coloring {
        Coloring {
            colors: vec![color; order],
            palette: if order == 0 { 0 } else { color },
        }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn palette(&self) -> Color {
        self.palette
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        let mut seen = FixedBitSet::with_capacity(self.palette as usize + 1);
        for &c in &self.colors {
            seen.insert(c as usize);
        }
        seen.count_ones(..)
    }

    /// Checks that the coloring covers exactly the vertices of `g`.
    pub fn check_total(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.order() {
            return Err(Error::InvalidColoring(format!(
                "coloring has {} entries for a graph of order {}",
                self.colors.len(),
                g.order()
            )));
        }
        Ok(())
    }

    /// Applies `perm` to every color; `perm[c - 1]` is the new color of `c`.
    pub fn permuted(&self, perm: &[Color]) -> Result<Coloring> {
        let colors = self.colors.iter().map(|&c| perm[c as usize - 1]).collect();
        Coloring::new(colors, self.palette.max(perm.iter().copied().max().unwrap_or(0)))
    }

    /// Same assignment with a wider declared palette.
    pub fn with_palette(mut self, palette: Color) -> Result<Coloring> {
        if self.colors.iter().any(|&c| c > palette) {
            return Err(Error::InvalidColoring(format!("palette {palette} is smaller than a used color")));
        }
        self.palette = palette;
        Ok(self)
    }
}

/// Set of colors seen on a vertex set, as a bitmask over the palette.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ColorSet(FixedBitSet);

impl ColorSet {
    pub fn new(palette: Color) -> ColorSet {
        ColorSet(FixedBitSet::with_capacity(palette as usize + 1))
    }

    pub fn insert(&mut self, c: Color) {
        self.0.grow(c as usize + 1);
        self.0.insert(c as usize);
    }

    pub fn contains(&self, c: Color) -> bool {
        self.0.contains(c as usize)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = Color> + '_ {
        self.0.ones().map(|c| c as Color)
    }

    pub fn to_vec(&self) -> Vec<Color> {
        self.iter().collect()
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// `c(N[v])`.
pub fn neighborhood_color_set(g: &Graph, c: &Coloring, v: Vertex) -> ColorSet {
    let mut set = ColorSet::new(c.palette());
    for u in g.closed_neighborhood(v).ones() {
        set.insert(c.color(u));
    }
    set
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_palette() {
        assert!(Coloring::new(vec![1, 2, 3], 2).is_err());
        assert!(Coloring::new(vec![0, 1], 2).is_err());
        assert_eq!(Coloring::from_colors(vec![1, 3, 3]).unwrap().palette(), 3);
        assert_eq!(Coloring::from_colors(vec![1, 3, 3]).unwrap().colors_used(), 2);
    }

    #[test]
    fn neighborhood_sets() {
        let p3 = Graph::path(3);
        let c = Coloring::uniform(3, 1);
        assert_eq!(neighborhood_color_set(&p3, &c, 1).to_vec(), vec![1]);

        let star = Graph::complete_bipartite(1, 3);
        let c = Coloring::from_colors(vec![1, 2, 3, 3]).unwrap();
        assert_eq!(neighborhood_color_set(&star, &c, 0).to_vec(), vec![1, 2, 3]);

        let c4 = Graph::cycle(4);
        let c = Coloring::from_colors(vec![1, 2, 1, 3]).unwrap();
        assert_eq!(neighborhood_color_set(&c4, &c, 0).to_vec(), vec![1, 2, 3]);
    }
}
