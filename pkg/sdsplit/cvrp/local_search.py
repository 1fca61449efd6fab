# vim: fdm=indent
# author:     Fabio Zanini
# date:       16/08/17
# content:    Neighborhood moves and first-improvement local search.
# Modules
import math
import time

from ..errors import InvariantError
from .routes import RouteSet, neighbor_lists


# Classes / functions
def tolerance(routeset):
    '''Smallest cost change counted as a real improvement'''
    return 1e-10 * max(1.0, routeset.cost)


def relocate_moves(rs, u, v):
    '''Move u right after or right before v'''
    D = rs.distances
    ru, iu = rs.position(u)
    rv, iv = rs.position(v)
    A = rs.routes[ru]

    if ru != rv:
        B = rs.routes[rv]
        if rs.loads[rv] + rs.demands[u] > rs.capacity:
            return
        a, b = rs.neighbors_in_route(A, iu)
        removal = D[a][b] - D[a][u] - D[u][b]
        pv, nv = rs.neighbors_in_route(B, iv)
        yield (removal + D[v][u] + D[u][nv] - D[v][nv],
               lambda: {ru: A[:iu] + A[iu + 1:], rv: B[:iv + 1] + [u] + B[iv + 1:]})
        yield (removal + D[pv][u] + D[u][v] - D[pv][v],
               lambda: {ru: A[:iu] + A[iu + 1:], rv: B[:iv] + [u] + B[iv:]})
    else:
        rest = A[:iu] + A[iu + 1:]
        jv = rest.index(v)
        old = rs.lengths[ru]
        for k in (jv + 1, jv):
            new = rest[:k] + [u] + rest[k:]
            if new != A:
                yield rs.length(new) - old, (lambda new=new: {ru: new})


def swap_moves(rs, u, v):
    '''Exchange the positions of u and v'''
    D = rs.distances
    q = rs.demands
    ru, iu = rs.position(u)
    rv, iv = rs.position(v)
    A = rs.routes[ru]

    if ru != rv:
        B = rs.routes[rv]
        if rs.loads[ru] - q[u] + q[v] > rs.capacity:
            return
        if rs.loads[rv] - q[v] + q[u] > rs.capacity:
            return
        a, b = rs.neighbors_in_route(A, iu)
        c, e = rs.neighbors_in_route(B, iv)
        delta = (D[a][v] + D[v][b] - D[a][u] - D[u][b] +
                 D[c][u] + D[u][e] - D[c][v] - D[v][e])

        def build():
            newA, newB = list(A), list(B)
            newA[iu], newB[iv] = v, u
            return {ru: newA, rv: newB}
        yield delta, build
    else:
        new = list(A)
        new[iu], new[iv] = v, u
        yield rs.length(new) - rs.lengths[ru], (lambda: {ru: new})


def two_opt_moves(rs, u, v):
    '''Reverse a segment of one route so that u and v become adjacent'''
    D = rs.distances
    ru, iu = rs.position(u)
    rv, iv = rs.position(v)
    if ru != rv:
        return
    A = rs.routes[ru]
    i, j = min(iu, iv), max(iu, iv)
    for s, t in ((i + 1, j), (i, j - 1)):
        if s >= t:
            continue
        p = A[s - 1] if s > 0 else 0
        nx = A[t + 1] if t + 1 < len(A) else 0
        delta = D[p][A[t]] + D[A[s]][nx] - D[p][A[s]] - D[A[t]][nx]
        yield delta, (lambda s=s, t=t: {ru: A[:s] + A[s:t + 1][::-1] + A[t + 1:]})


def two_opt_star_moves(rs, u, v):
    '''Exchange route tails between the routes of u and v'''
    D = rs.distances
    ru, iu = rs.position(u)
    rv, iv = rs.position(v)
    if ru == rv:
        return
    A, B = rs.routes[ru], rs.routes[rv]
    Q = rs.capacity
    nu = A[iu + 1] if iu + 1 < len(A) else 0
    nv = B[iv + 1] if iv + 1 < len(B) else 0
    head_a = rs.load(A[:iu + 1])
    head_b = rs.load(B[:iv + 1])
    tail_a = rs.loads[ru] - head_a
    tail_b = rs.loads[rv] - head_b

    # u continues with the tail of v's route and vice versa
    if (nu or nv) and (head_a + tail_b <= Q) and (head_b + tail_a <= Q):
        yield (D[u][nv] + D[v][nu] - D[u][nu] - D[v][nv],
               lambda: {ru: A[:iu + 1] + B[iv + 1:], rv: B[:iv + 1] + A[iu + 1:]})

    # u is followed by v, the heads joined back to back
    if (head_a + head_b <= Q) and (tail_a + tail_b <= Q):
        yield (D[u][v] + D[nu][nv] - D[u][nu] - D[v][nv],
               lambda: {ru: A[:iu + 1] + B[:iv + 1][::-1],
                        rv: A[iu + 1:][::-1] + B[iv + 1:]})


def or_opt_moves(rs, u, v, lengths=(2, 3)):
    '''Move the segment of 2 or 3 customers starting at u next to v'''
    D = rs.distances
    ru, iu = rs.position(u)
    rv, iv = rs.position(v)
    A = rs.routes[ru]

    for seglen in lengths:
        if iu + seglen > len(A):
            break
        seg = A[iu:iu + seglen]
        if v in seg:
            continue
        s0, sl = seg[0], seg[-1]

        if ru != rv:
            B = rs.routes[rv]
            if rs.loads[rv] + rs.load(seg) > rs.capacity:
                continue
            a = A[iu - 1] if iu > 0 else 0
            b = A[iu + seglen] if iu + seglen < len(A) else 0
            removal = D[a][b] - D[a][s0] - D[sl][b]
            pv, nv = rs.neighbors_in_route(B, iv)
            rest = A[:iu] + A[iu + seglen:]
            for k, x, y in ((iv + 1, v, nv), (iv, pv, v)):
                for piece, first, last in ((seg, s0, sl), (seg[::-1], sl, s0)):
                    delta = removal + D[x][first] + D[last][y] - D[x][y]
                    yield delta, (lambda k=k, piece=piece, rest=rest:
                                  {ru: rest, rv: B[:k] + piece + B[k:]})
        else:
            rest = A[:iu] + A[iu + seglen:]
            jv = rest.index(v)
            old = rs.lengths[ru]
            for k in (jv + 1, jv):
                for piece in (seg, seg[::-1]):
                    new = rest[:k] + piece + rest[k:]
                    if new != A:
                        yield rs.length(new) - old, (lambda new=new: {ru: new})


neighborhoods = (
        relocate_moves,
        swap_moves,
        two_opt_moves,
        two_opt_star_moves,
        or_opt_moves,
        )


def pair_moves(rs, u, v):
    '''All candidate moves pairing customer u with customer v'''
    for neighborhood in neighborhoods:
        yield from neighborhood(rs, u, v)


def apply_move(rs, delta, changes, debug=False):
    '''Apply a move, checking the predicted delta in debug mode'''
    if not debug:
        rs.apply(changes)
        return

    before = sum(rs.length(r) for r in rs.routes)
    rs.apply(changes)
    after = sum(rs.length(r) for r in rs.routes)
    if not math.isclose(after - before, delta,
                        rel_tol=1e-9, abs_tol=1e-9 * max(1.0, before)):
        raise InvariantError(
            'Move delta {:} does not match the cost change {:}'.format(
                delta, after - before))
    if not all(load <= rs.capacity for load in rs.loads):
        raise InvariantError('A move broke the capacity constraint')


def descend(rs, neighbors, deadline=None, debug=False):
    '''First-improvement descent until no neighborhood improves.

    Args:
        rs (RouteSet): the routes, modified in place.
        neighbors (list): neighbor lists by customer id.
        deadline (float or None): time.perf_counter() value to stop at.
        debug (bool): check every move delta.

    Returns:
        number of moves applied.
    '''
    n_moves = 0
    n = len(neighbors) - 1
    improved = True
    while improved:
        improved = False
        for u in range(1, n + 1):
            restart = True
            while restart:
                restart = False
                tol = tolerance(rs)
                for v in neighbors[u]:
                    for delta, build in pair_moves(rs, u, v):
                        if delta < -tol:
                            apply_move(rs, delta, build(), debug=debug)
                            n_moves += 1
                            improved = restart = True
                            break
                    if restart:
                        break
            if (deadline is not None) and (time.perf_counter() > deadline):
                rs.compact()
                return n_moves
    rs.compact()
    return n_moves


def local_search_improve(instance, solution, config=None):
    '''Improve a feasible CVRP solution by first-improvement descent.

    Neighborhoods: relocate, swap, 2-opt, 2-opt* and Or-opt, each pairing
    a customer with its nearest neighbors only.

    Args:
        instance (Instance): the CVRP instance.
        solution (Solution): a feasible CVRP solution.
        config (CvrpSolverConfig or None): neighbor list size and debug
            flag; defaults from the config file if None.

    Returns:
        Solution with cost not larger than the input.
    '''
    from .config import CvrpSolverConfig

    if config is None:
        config = CvrpSolverConfig.from_config()

    rs = RouteSet.from_solution(instance, solution)
    neighbors = neighbor_lists(instance, config.neighbor_list_size)
    n_moves = descend(rs, neighbors, debug=config.debug)
    if n_moves == 0:
        return solution
    return rs.to_solution()
