//! Cells (allele assignments) on a graph and the female/male partition.
//!
//! Indices into [`ConfigurationSpace::cells`] are 0-based; allele values and
//! vertex labels are 1-based. Female types are the female cells in ascending
//! cell order, and likewise for male types.

use crate::construction::graph::{connected_components, Graph};
use crate::error::{Error, Result};

/// Default cap on `|Ω|`.
pub const DEFAULT_CELL_CAP: usize = 1 << 20;

/// An assignment of an allele `1..=allele_count` to every vertex, in vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell(pub Vec<usize>);

impl Cell {
    pub fn alleles(&self) -> &[usize] {
        &self.0
    }

    /// Values on the given 1-based vertices.
    pub fn restrict<'a>(&'a self, vertices: &'a [usize]) -> impl Iterator<Item = usize> + 'a {
        vertices.iter().map(move |&v| self.0[v - 1])
    }

    fn agrees_on(&self, other: &Cell, vertices: &[usize]) -> bool {
        vertices.iter().all(|&v| self.0[v - 1] == other.0[v - 1])
    }
}

impl std::fmt::Display for Cell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

/// All `allele_count^vertex_count` cells in lexicographic order (vertex 1 most significant).
pub fn enumerate_cells(g: &Graph, allele_count: usize) -> Result<Vec<Cell>> {
    enumerate_cells_capped(g, allele_count, DEFAULT_CELL_CAP)
}

pub fn enumerate_cells_capped(g: &Graph, allele_count: usize, cap: usize) -> Result<Vec<Cell>> {
    if allele_count == 0 {
        return Err(Error::InvalidGraph("allele set must be nonempty".into()));
    }
    let vertices = g.vertex_count();
    let total = (allele_count as u128)
        .checked_pow(vertices as u32)
        .unwrap_or(u128::MAX);
    if total > cap as u128 {
        return Err(Error::SizeOverflow { cells: total, cap });
    }
    let total = total as usize;
    let mut cells = Vec::with_capacity(total);
    let mut current = vec![1usize; vertices];
    for _ in 0..total {
        cells.push(Cell(current.clone()));
        // Odometer increment, last vertex fastest.
        for pos in (0..vertices).rev() {
            if current[pos] < allele_count {
                current[pos] += 1;
                break;
            }
            current[pos] = 1;
        }
    }
    Ok(cells)
}

/// The cell set `Ω` of a graph with its component structure and a female/male split.
#[derive(Debug, Clone)]
pub struct ConfigurationSpace {
    graph: Graph,
    allele_count: usize,
    cells: Vec<Cell>,
    components: Vec<Vec<usize>>,
    females: Vec<usize>,
    males: Vec<usize>,
    /// Position of each cell within `females` or `males`.
    type_index: Vec<Side>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Female(usize),
    Male(usize),
}

impl ConfigurationSpace {
    /// `females` lists 0-based cell indices; every other cell is male.
    pub fn new(graph: Graph, allele_count: usize, females: &[usize]) -> Result<Self> {
        Self::with_cap(graph, allele_count, females, DEFAULT_CELL_CAP)
    }

    pub fn with_cap(
        graph: Graph,
        allele_count: usize,
        females: &[usize],
        cap: usize,
    ) -> Result<Self> {
        let cells = enumerate_cells_capped(&graph, allele_count, cap)?;
        let mut is_female = vec![false; cells.len()];
        for &f in females {
            if f >= cells.len() {
                return Err(Error::InvalidPartition(format!(
                    "female cell index {f} out of range 0..{}",
                    cells.len()
                )));
            }
            if is_female[f] {
                return Err(Error::InvalidPartition(format!(
                    "female cell index {f} listed twice"
                )));
            }
            is_female[f] = true;
        }
        let females: Vec<usize> = (0..cells.len()).filter(|&i| is_female[i]).collect();
        let males: Vec<usize> = (0..cells.len()).filter(|&i| !is_female[i]).collect();
        if females.is_empty() || males.is_empty() {
            return Err(Error::InvalidPartition(
                "female and male sets must both be nonempty".into(),
            ));
        }
        let mut type_index = vec![Side::Female(0); cells.len()];
        for (pos, &c) in females.iter().enumerate() {
            type_index[c] = Side::Female(pos);
        }
        for (pos, &c) in males.iter().enumerate() {
            type_index[c] = Side::Male(pos);
        }
        let components = connected_components(&graph);
        Ok(Self {
            graph,
            allele_count,
            cells,
            components,
            females,
            males,
            type_index,
        })
    }

    /// Females are the cells satisfying `predicate`.
    pub fn with_female_rule(
        graph: Graph,
        allele_count: usize,
        predicate: impl Fn(&Cell) -> bool,
    ) -> Result<Self> {
        let cells = enumerate_cells(&graph, allele_count)?;
        let females: Vec<usize> = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| predicate(c))
            .map(|(i, _)| i)
            .collect();
        Self::new(graph, allele_count, &females)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn allele_count(&self) -> usize {
        self.allele_count
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }

    /// Female cell indices in type order.
    pub fn females(&self) -> &[usize] {
        &self.females
    }

    pub fn males(&self) -> &[usize] {
        &self.males
    }

    /// Number of female types `n`.
    pub fn n(&self) -> usize {
        self.females.len()
    }

    /// Number of male types `nu`.
    pub fn nu(&self) -> usize {
        self.males.len()
    }

    pub fn female_type(&self, cell: usize) -> Option<usize> {
        match self.type_index.get(cell) {
            Some(Side::Female(p)) => Some(*p),
            _ => None,
        }
    }

    pub fn male_type(&self, cell: usize) -> Option<usize> {
        match self.type_index.get(cell) {
            Some(Side::Male(p)) => Some(*p),
            _ => None,
        }
    }

    /// Whether `cell` agrees, on every component, with either parent.
    fn compatible(&self, cell: &Cell, mother: &Cell, father: &Cell) -> bool {
        self.components
            .iter()
            .all(|comp| cell.agrees_on(mother, comp) || cell.agrees_on(father, comp))
    }
}

/// The compatible sets `(Ω^f, Ω^m)` for a mother cell `f_idx ∈ F` and a father
/// cell `m_idx ∈ M`, as ascending cell indices.
///
/// A cell is compatible when its restriction to each component equals the
/// restriction of the mother or of the father; the choice may differ between
/// components.
pub fn compatible_sets(
    cs: &ConfigurationSpace,
    f_idx: usize,
    m_idx: usize,
) -> Result<(Vec<usize>, Vec<usize>)> {
    if cs.female_type(f_idx).is_none() {
        return Err(Error::IndexOutOfPartition {
            index: f_idx,
            side: "female",
        });
    }
    if cs.male_type(m_idx).is_none() {
        return Err(Error::IndexOutOfPartition {
            index: m_idx,
            side: "male",
        });
    }
    let mother = &cs.cells[f_idx];
    let father = &cs.cells[m_idx];
    let pick = |pool: &[usize]| -> Vec<usize> {
        pool.iter()
            .copied()
            .filter(|&c| cs.compatible(&cs.cells[c], mother, father))
            .collect()
    };
    Ok((pick(&cs.females), pick(&cs.males)))
}
