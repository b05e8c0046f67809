use regpart_core::partition::Partition;

/// Counts fillings of `shape` with content `content` by trying every
/// placement cell by cell, rows left to right, then checking both rules.
pub fn brute_force_ssyt(shape: &Partition, content: &Partition) -> u64 {
    let cells: Vec<(usize, usize)> =
        shape.parts().iter().enumerate().flat_map(|(i, &len)| (0..len).map(move |j| (i, j))).collect();
    let mut grid: Vec<Vec<usize>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
    let mut remaining: Vec<usize> = content.parts().to_vec();
    fn go(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, remaining: &mut Vec<usize>) -> u64 {
        if k == cells.len() {
            let rows_ok = grid.iter().all(|row| row.windows(2).all(|w| w[0] <= w[1]));
            let cols_ok = (1..grid.len()).all(|i| (0..grid[i].len()).all(|j| grid[i - 1][j] < grid[i][j]));
            return u64::from(rows_ok && cols_ok);
        }
        let (i, j) = cells[k];
        let mut total = 0;
        for v in 0..remaining.len() {
            if remaining[v] == 0 {
                continue;
            }
            remaining[v] -= 1;
            grid[i][j] = v + 1;
            total += go(k + 1, cells, grid, remaining);
            remaining[v] += 1;
        }
        total
    }
    go(0, &cells, &mut grid, &mut remaining)
}
