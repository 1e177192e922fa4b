"""Walk a single-qubit program through expansion and optimization.

The if-branch body starts with Y X and ends with Y, and the code around
the conditional is X Y before and Y Z after. Optimizing in place only
finds the H H pair inside the body. Copying the surrounding code into both
branches first lets the optimizer see the whole if-path at once, and it
collapses to nothing.

Run: python demos/motivating_example.py
"""

from dyncirc import Circuit, equivalent, h, if_else, metrics, optimize, program_size, rec_branch_expand, x, y, z


def show(title, c):
    m = metrics(c)
    print(f"{title}: size {program_size(c)}, gate count {m.min_p_gate_count}..{m.max_p_gate_count}")
    for ins in c.instrs:
        print("   ", ins)


def main():
    prog = Circuit(1, 1, (
        x(0), y(0),
        if_else(0, [y(0), x(0), h(0), h(0), z(0), y(0)]),
        y(0), z(0),
    ))
    show("input", prog)
    show("optimized in place", optimize(prog))
    expanded = rec_branch_expand(prog, 1)
    show("expanded", expanded)
    final = optimize(expanded)
    show("expanded then optimized", final)
    for start in (False, True):
        print(f"equivalent with c[0]={int(start)} initially:", equivalent(prog, final, initial_clbits=[start]))


if __name__ == "__main__":
    main()
