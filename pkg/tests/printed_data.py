"""Matrices printed for the four certified cases, transcribed verbatim.

Rows are separated by ';' and entries by ','.  These are the published
reference values; nothing here is computed.
"""
from hgg.certify import parse_matrix


def M(text: str):
    return parse_matrix(text)


C1 = dict(
    alpha="0,0,0,0,1/2,1/2",
    beta="1/3,1/3,2/3,2/3,1/6,5/6",
    f=[1, -2, -1, 4, -1, -2, 1],
    g=[1, 1, 2, 1, 2, 1, 1],
    A=M("0,0,0,0,0,-1; 1,0,0,0,0,2; 0,1,0,0,0,1; 0,0,1,0,0,-4; 0,0,0,1,0,1; 0,0,0,0,1,2"),
    B=M("0,0,0,0,0,-1; 1,0,0,0,0,-1; 0,1,0,0,0,-2; 0,0,1,0,0,-1; 0,0,0,1,0,-2; 0,0,0,0,1,-1"),
    C=M("1,0,0,0,0,-3; 0,1,0,0,0,-3; 0,0,1,0,0,3; 0,0,0,1,0,-3; 0,0,0,0,1,-3; 0,0,0,0,0,1"),
    # orbit vectors v, Bv, ..., B^5 v as columns of the printed list
    orbit=[[-3, -3, 3, -3, -3, 0], [0, -3, -3, 3, -3, -3], [3, 3, 3, 0, 9, 0],
           [0, 3, 3, 3, 0, 9], [-9, -9, -15, -6, -15, -9], [9, 0, 9, -6, 12, -6]],
    omega_orbit=M("0,-3,0,9,-9,-6; 3,0,-3,0,9,-9; 0,3,0,-3,0,9; -9,0,3,0,-3,0;"
                  " 9,-9,0,3,0,-3; 6,9,-9,0,3,0"),
    Z=M("-5/27,-4/27,1/9,1/27,2/27,0; 1/27,-1/3,-1/27,4/27,1/9,2/27;"
        " -5/27,-7/27,-1/9,1/27,8/27,1/9; 4/27,-1/3,-4/27,-2/27,1/9,8/27;"
        " 1/27,-4/27,-1/9,-2/27,2/27,1/9; 4/27,-1/9,-1/27,-2/27,0,2/27"),
    omega1=M("0,2,1,3,-4,-5; -2,0,2,1,3,-4; -1,-2,0,2,1,3; -3,-1,-2,0,2,1;"
             " 4,-3,-1,-2,0,2; 5,4,-3,-1,-2,0"),
    X=M("0,0,0,0,0,-3; -3,-6,0,0,0,-3; -3,-6,0,0,6,3; 3,12,-27/2,0,-3,-3;"
        " -3,-9,-27/2,27/2,6,-3; -3,0,0,0,0,0"),
    omega2=M("0,0,0,0,0,81; 0,0,0,0,-162,0; 0,0,0,-729/2,0,0; 0,0,729/2,0,0,0;"
             " 0,162,0,0,0,0; -81,0,0,0,0,0"),
    lambdas=("81", "-162", "-729/2"),
    a=M("3,3,9/2,-9/2,-2,1; 0,-3/2,-9/4,9/4,1,0; 0,0,-1,1,0,0; 0,1,-5/2,3/2,0,0;"
        " 1,-1,0,0,0,0; -1,0,0,0,0,0"),
    b=M("0,3,9/2,-9/2,-2,1; 0,-3/2,-9/4,9/4,1,0; 0,0,-1,1,0,0; 0,1,-5/2,3/2,0,0;"
        " 1,-1,0,0,0,0; -1,0,0,0,0,0"),
    c=M("1,0,0,0,0,0; 0,1,0,0,0,0; 0,0,1,0,0,0; 0,0,0,1,0,0; 0,0,0,0,1,0; -3,0,0,0,0,1"),
    q1=M("1,0,0,0,0,3; 0,1,0,0,0,0; 0,0,1,0,0,0; 0,0,0,1,0,0; 0,0,0,0,1,0; 0,0,0,0,0,1"),
    q2=M("1,0,0,0,52488,0; 0,1,0,0,0,-26244; 0,0,1,0,0,0; 0,0,0,1,0,0; 0,0,0,0,1,0;"
         " 0,0,0,0,0,1"),
    y=3, x=52488, ratio="-1/2",
)

C10 = dict(
    alpha="0,0,0,0,1/3,2/3",
    beta="1/9,2/9,4/9,5/9,7/9,8/9",
    f=[1, -3, 3, -2, 3, -3, 1],
    g=[1, 0, 0, 1, 0, 0, 1],
    A=M("0,0,0,0,0,-1; 1,0,0,0,0,3; 0,1,0,0,0,-3; 0,0,1,0,0,2; 0,0,0,1,0,-3; 0,0,0,0,1,3"),
    B=M("0,0,0,0,0,-1; 1,0,0,0,0,0; 0,1,0,0,0,0; 0,0,1,0,0,-1; 0,0,0,1,0,0; 0,0,0,0,1,0"),
    C=M("1,0,0,0,0,-3; 0,1,0,0,0,3; 0,0,1,0,0,-3; 0,0,0,1,0,3; 0,0,0,0,1,-3; 0,0,0,0,0,1"),
    omega1=M("0,1,2,2,1,-1; -1,0,1,2,2,1; -2,-1,0,1,2,2; -2,-2,-1,0,1,2;"
             " -1,-2,-2,-1,0,1; 1,-1,-2,-2,-1,0"),
    X=M("0,0,0,0,0,-1; -1,1,0,0,0,1; 1,0,0,0,-1,-1; -1,-2,-1,0,2,1; 1,2,0,1,-1,-1;"
        " -1,0,0,0,0,0"),
    omega2=M("0,0,0,0,0,1; 0,0,0,0,1,0; 0,0,0,-1,0,0; 0,0,1,0,0,0; 0,-1,0,0,0,0;"
             " -1,0,0,0,0,0"),
    lambdas=("1", "1", "-1"),
    a=M("2,-2,0,-1,1,1; 0,-2,0,-1,1,0; 0,0,0,1,0,0; 0,1,-1,2,0,0; 1,-3,0,-1,1,0;"
        " -1,0,0,0,0,0"),
    b=M("-1,-2,0,-1,1,1; 0,-2,0,-1,1,0; 0,0,0,1,0,0; 0,1,-1,2,0,0; 1,-3,0,-1,1,0;"
        " -1,0,0,0,0,0"),
    c=M("1,0,0,0,0,0; 0,1,0,0,0,0; 0,0,1,0,0,0; 0,0,0,1,0,0; 0,0,0,0,1,0; -3,0,0,0,0,1"),
    q1=M("1,0,0,0,0,3; 0,1,0,0,0,0; 0,0,1,0,0,0; 0,0,0,1,0,0; 0,0,0,0,1,0; 0,0,0,0,0,1"),
    q2=M("1,0,0,0,-198,0; 0,1,0,0,0,-198; 0,0,1,0,0,0; 0,0,0,1,0,0; 0,0,0,0,1,0;"
         " 0,0,0,0,0,1"),
    y=3, x=-198, ratio="1",
)

C42 = dict(
    alpha="0,0,1/4,1/4,3/4,3/4",
    beta="1/3,2/3,1/12,5/12,7/12,11/12",
    f=[1, -2, 3, -4, 3, -2, 1],
    g=[1, 1, 0, -1, 0, 1, 1],
    A=M("0,0,0,0,0,-1; 1,0,0,0,0,2; 0,1,0,0,0,-3; 0,0,1,0,0,4; 0,0,0,1,0,-3; 0,0,0,0,1,2"),
    B=M("0,0,0,0,0,-1; 1,0,0,0,0,-1; 0,1,0,0,0,0; 0,0,1,0,0,1; 0,0,0,1,0,0; 0,0,0,0,1,-1"),
    C=M("1,0,0,0,0,-3; 0,1,0,0,0,3; 0,0,1,0,0,-3; 0,0,0,1,0,3; 0,0,0,0,1,-3; 0,0,0,0,0,1"),
    omega1=M("0,0,-1,-1,0,-1; 0,0,0,-1,-1,0; 1,0,0,0,-1,-1; 1,1,0,0,0,-1;"
             " 0,1,1,0,0,0; 1,0,1,1,0,0"),
    X=M("0,0,0,-3,0,0; 0,3,-3,3,0,3/2; 0,-3,3,-3,0,3/2; 0,-6,-3,3,6,0;"
        " -3/2,3,3,-3,-3,-3/2; 0,0,-3,0,0,0"),
    omega2=M("0,0,0,0,0,-9/2; 0,0,0,0,-18,0; 0,0,0,9,0,0; 0,0,-9,0,0,0; 0,18,0,0,0,0;"
             " 9/2,0,0,0,0,0"),
    lambdas=("-9/2", "-18", "9"),
    a=M("1/2,3,1,0,-3,-1/2; 1/2,-3/2,0,0,1,1/4; 1/2,-1,1,1,1,1/2; 0,0,-1,0,0,0;"
        " 3/4,-5/2,-1/2,0,3/2,3/4; 0,1,0,0,0,1/2"),
    b=M("1/2,3,1,0,-3,-1/2; 1/2,-3/2,0,0,1,1/4; 1/2,-1,-2,1,1,1/2; 0,0,-1,0,0,0;"
        " 3/4,-5/2,-1/2,0,3/2,3/4; 0,1,0,0,0,1/2"),
    c=M("1,0,0,0,0,0; 0,1,0,0,0,0; 0,0,1,0,0,0; 0,0,-3,1,0,0; 0,0,0,0,1,0; 0,0,0,0,0,1"),
    q1=M("1,0,0,0,0,104727556800; 0,1,0,0,0,0; 0,0,1,0,0,0; 0,0,0,1,0,0; 0,0,0,0,1,0;"
         " 0,0,0,0,0,1"),
    q2=M("1,0,0,0,17454592800,0; 0,1,0,0,0,4363648200; 0,0,1,0,0,0; 0,0,0,1,0,0;"
         " 0,0,0,0,1,0; 0,0,0,0,0,1"),
    y=104727556800, x=17454592800, ratio="1/4",
)

C59 = dict(
    alpha="0,0,1/12,5/12,7/12,11/12",
    beta="1/3,2/3,1/4,3/4,1/4,3/4",
    f=[1, -2, 0, 2, 0, -2, 1],
    g=[1, 1, 3, 2, 3, 1, 1],
    A=M("0,0,0,0,0,-1; 1,0,0,0,0,2; 0,1,0,0,0,0; 0,0,1,0,0,-2; 0,0,0,1,0,0; 0,0,0,0,1,2"),
    B=M("0,0,0,0,0,-1; 1,0,0,0,0,-1; 0,1,0,0,0,-3; 0,0,1,0,0,-2; 0,0,0,1,0,-3;"
        " 0,0,0,0,1,-1"),
    C=M("1,0,0,0,0,-3; 0,1,0,0,0,-3; 0,0,1,0,0,0; 0,0,0,1,0,-3; 0,0,0,0,1,-3; 0,0,0,0,0,1"),
    omega1=M("0,1,0,1,-2,-3; -1,0,1,0,1,-2; 0,-1,0,1,0,1; -1,0,-1,0,1,0;"
             " 2,-1,0,-1,0,1; 3,2,-1,0,-1,0"),
    X=M("-3,0,0,0,0,0; -3,0,0,0,-6,-3; 0,6,0,0,12,-3; -3,0,0,-12,6,0;"
        " -3,6,12,24,12,-3; 0,0,0,0,0,-3"),
    omega2=M("0,0,0,0,0,-36; 0,0,0,0,72,0; 0,0,0,144,0,0; 0,0,-144,0,0,0;"
             " 0,-72,0,0,0,0; 36,0,0,0,0,0"),
    lambdas=("-36", "72", "144"),
    a=M("0,0,0,0,0,-1; 0,-3,-6,-12,-7,1; 0,0,-2,-5,1,0; 0,0,1,2,0,0; 0,1,2,4,2,0;"
        " 1,-2,-4,-8,-4,3"),
    b=M("0,0,0,0,0,-1; 0,-3,-6,-12,-7,1; 0,0,-2,-5,1,0; 0,0,1,2,0,0; 0,1,2,4,2,0;"
        " 1,-2,-4,-8,-4,0"),
    c=M("1,0,0,0,0,-3; 0,1,0,0,0,0; 0,0,1,0,0,0; 0,0,0,1,0,0; 0,0,0,0,1,0; 0,0,0,0,0,1"),
    q1=M("1,0,0,0,0,-3; 0,1,0,0,0,0; 0,0,1,0,0,0; 0,0,0,1,0,0; 0,0,0,0,1,0; 0,0,0,0,0,1"),
    q2=M("1,0,0,0,-1080,0; 0,1,0,0,0,540; 0,0,1,0,0,0; 0,0,0,1,0,0; 0,0,0,0,1,0;"
         " 0,0,0,0,0,1"),
    y=-3, x=-1080, ratio="-1/2",
)

CASES = {"C-1": C1, "C-10": C10, "C-42": C42, "C-59": C59}
