"""The 39 quadratic relations between an AES S-box input x and output y.

Bit i of a byte is x_i (least significant bit first); every relation
vanishes on all 256 pairs (x, S(x)).
"""

SBOX_RELATIONS = (
    "x5x7+x5x6+x3x7+x3x6+x2x4+x1x7+x1x6+x1x5+x1x3+x1x2+x0x7+x0x3+x0x2+x6y7+x7y6+x6y6+"
    "x7y5+x5y5+x7y4+x1y4+x2y3+x0y3+x6y2+x4y2+x3y2+x0y2+x4y0+x2y0+x7+x5+x3+y7+y2+y0+1",
    "x6x7+x5x7+x4x7+x4x6+x4x5+x3x4+x2x5+x1x7+x1x6+x1x5+x1x4+x1x3+x1x2+x0x5+x0x1+x6y6+"
    "y5y7+x3y4+y4y7+y4y5+x5y3+x0y3+y3y6+y3y4+x3y2+x0y2+y2y4+y2y3+x5y0+x3y0+x1y0+y0y7+"
    "y0y3+y0y1+x5+x3+x0+y2+1",
    "x1y7+x0y7+y6y7+x7y5+x6y5+y5y7+x7y4+x5y3+x2y3+y3y6+x2y2+x0y2+y2y5+x6y1+x4y1+x1y1+"
    "y1y2+x6y0+x5y0+x4y0+y0y7+y0y6+y0y5+y0y4+y0y3+x3+x1+y3+y2+y1+1",
    "x6x7+x4x6+x3x7+x2x7+x1x4+x0x6+x0x3+x6y7+x4y7+x3y7+x7y6+x3y6+x7y5+x7y4+x1y4+x5y3+"
    "x4y3+x1y3+x6y2+x2y2+x6y1+x5y1+x3y1+x1y1+x0y1+x7y0+x6y0+x5y0+x3y0+x2y0+x1y0+x6+x1",
    "x6y7+x5y7+x1y7+x0y7+x5y6+x4y6+x3y6+x4y4+x3y4+x2y4+x4y3+x3y3+y3y5+x2y2+y2y7+y2y4+"
    "y2y3+x7y1+x4y1+x3y1+x1y1+y1y7+y1y6+y1y5+y1y2+x7y0+x5y0+x4y0+x3y0+y0y4+y0y3+y0y2+"
    "x6+x4+x3+y2",
    "x2y7+y5y6+x1y4+x7y3+x2y3+x1y3+x0y3+y3y6+y3y4+x4y2+x2y2+x0y2+y2y6+y2y5+y2y3+x5y1+"
    "x3y1+y1y7+y1y5+y1y4+y1y3+y1y2+x5y0+x4y0+x3y0+x0y0+y0y6+y0y1+x7+x6+x3+x2+x1+y4+"
    "y2+y1+y0",
    "x5y7+x3y6+x2y6+x0y6+x6y5+x5y5+x0y5+x6y4+x5y4+x3y4+x2y4+x0y4+y4y7+y3y6+y3y5+x3y2+"
    "x2y2+x0y2+y2y7+y2y6+y2y5+x3y1+x2y1+y1y7+y1y6+y1y3+x5y0+x4y0+x1y0+y0y7+y0y2+x6+"
    "x1+y4+y3+y1",
    "x6y7+x3y7+x0y7+x2y6+x4y4+x2y4+x0y4+x7y3+x6y3+x3y3+x2y3+x1y3+x0y3+x5y2+x2y2+x1y2+"
    "x3y1+x2y1+x1y1+x3y0+x6+x2+x1+x0+y2",
    "x7y7+x4y7+x1y7+x7y6+x6y6+x1y6+y6y7+x7y5+x6y5+x2y5+x0y5+x6y4+x4y4+x2y4+y4y5+x4y3+"
    "x3y3+x2y3+x1y3+x0y3+y3y6+y3y5+x3y2+y2y4+x6y1+x5y1+x4y1+y1y5+y1y2+x6y0+x2y0+x1y0+"
    "y0y6+y4+y3",
    "x4y7+x3y7+x4y6+x2y6+x1y6+x0y4+x3y3+x1y3+x0y3+x7y2+x3y2+x2y2+x1y2+x0y2+x7y1+x6y1+"
    "x5y1+x4y1+x3y1+x0y1+x4+x2+x1+y2",
    "x3x6+x2x5+x1x4+x1x2+x0x4+x0x1+x4y6+x2y6+x1y6+x7y5+x7y4+x2y4+x6y3+x4y3+x3y3+x2y3+"
    "x7y2+x0y2+x4y1+x3y1+x5y0+x2y0+x1y0+x4+x1+y4+y3+y0+1",
    "x4x7+x2x3+x1x5+x1x4+x0x7+x0x6+x0x5+x0x4+x0x1+x7y7+x4y7+x1y6+x2y4+x1y4+x0y4+x7y3+"
    "x4y3+x3y3+x4y2+x3y2+x0y2+x7y1+x5y1+x2y1+x1y1+x0y1+x1y0+x0y0+x7+x1+x0+y2",
    "x6x7+x4x5+x3x7+x3x5+x2x5+x2x4+x2x3+x1x7+x0x6+x0x4+x2y7+x0y7+x1y6+x6y5+x2y4+x6y3+"
    "x5y3+x2y3+x6y2+x4y2+x3y2+x2y2+x1y2+x7y1+x5y1+x6y0+x5y0+x4y0+x3y0+x0y0",
    "x5x7+x3x6+x1x7+x1x2+x0x4+x0x3+x1y7+x2y6+x1y6+x6y5+x4y5+x2y5+x0y4+x5y3+x2y3+x6y2+"
    "x5y2+x1y2+x0y2+x7y1+x6y0+x5y0+x0y0+x6+x1+y6+y2+y1",
    "x1y7+x0y7+x2y6+x6y5+x2y5+x4y4+x3y4+x2y4+x1y4+x0y4+x5y3+x2y3+x1y3+x7y2+x4y2+x3y2+"
    "x1y2+x6y1+x3y1+x2y1+x1y1+x0y1+x5y0+x0y0+x3+y2",
    "x5x7+x3x6+x1x7+x1x2+x0x4+x0x3+x6y7+x3y7+x0y7+x4y6+x5y5+x2y5+x4y4+x3y3+x1y2+x0y2+"
    "x7y1+x5y1+x4y1+x2y1+x7y0+x6y0+x1y0+x6+x5+x4+x2+x0+y7",
    "x7y7+x7y6+x6y6+x4y6+x2y6+x1y6+x7y5+x2y5+x7y4+x1y4+x0y4+y4y6+x7y3+x3y3+y3y5+y3y4+"
    "x7y2+x4y2+x3y2+y2y4+y2y3+y1y6+x3y0+x2y0+x1y0+y0y6+y0y4+y0y2+y0y1+x5+x4+x3+x1+y4+"
    "y2+y1",
    "x7y6+y6y7+x7y5+x3y5+y5y7+x7y4+x0y4+y4y7+y4y5+x6y3+x4y3+x3y3+x1y3+y3y7+y3y6+y3y5+"
    "y3y4+x6y2+x5y2+x4y2+x1y2+x0y2+y2y5+x6y1+x5y1+x4y1+x0y1+y1y7+y1y4+y1y2+x5y0+x4y0+"
    "y0y7+y0y5+y0y4+x0+y0",
    "x6y6+x1y6+x5y5+x3y4+x0y4+x7y3+x6y3+x5y3+x1y3+x0y3+x7y2+x7y1+x6y1+x4y1+x3y1+x0y1+"
    "x4y0+x2y0+x7+x6+x4+x3+x0+y2",
    "x6x7+x5x7+x4x6+x3x7+x2x7+x2x5+x1x7+x0x6+x0x1+x7y7+x3y7+x1y7+x5y6+x0y4+x6y3+x1y3+"
    "x7y2+x6y2+x5y2+x4y2+x3y2+x4y1+x2y1+x5y0+x3y0+x5+x2+x1+x0+y3+y2",
    "x0y7+x2y6+x0y6+x5y5+x0y5+x6y4+x3y4+x2y4+x0y4+x7y3+x6y3+x4y3+x3y3+x2y3+x4y2+x3y2+"
    "x4y1+x2y1+x7y0+x2y0+x0y0+x7+x4+x2+x1+y4+y1+y0",
    "x5x7+x5x6+x4x6+x3x5+x2x6+x2x5+x1x7+x1x6+x0x7+x0x6+x0x3+x0x1+x6y7+x3y6+x3y4+x0y4+"
    "x7y3+x4y3+x3y3+x5y2+x4y2+x6y1+x4y1+x2y1+x1y1+x1y0+x5+x0+y4+y2",
    "x5x7+x5x6+x3x7+x3x4+x2x6+x2x4+x1x4+x1x3+x1x2+x0x6+x7y7+x6y7+x4y7+x3y7+x1y6+x1y4+"
    "x7y3+x3y3+x2y3+x6y2+x2y2+x0y2+x7y1+x5y1+x4y1+x3y1+x6y0+x3y0+x1y0+x6+x3+x2+y4",
    "x5x7+x4x6+x4x5+x3x5+x2x7+x2x4+x2x3+x0x4+x0x1+x4y6+x2y6+x7y5+x7y4+x6y4+x1y4+x6y3+"
    "x5y3+x2y3+x1y3+x7y2+x5y2+x7y1+x6y1+x0y1+x4y0+x3y0+x1y0+x3+x1+y4+y3",
    "x5x7+x4x6+x3x7+x3x5+x3x4+x2x4+x1x6+x1x3+x1x2+x0x7+x4y7+x3y7+x0y7+x4y6+x2y6+x0y6+"
    "x5y5+x0y5+x6y4+x6y3+x6y2+x4y2+x3y2+x1y2+x5y1+x4y1+x5y0+x1y0+x0y0+x7+x5+y1+y0",
    "x6x7+x4x6+x4x5+x2x6+x2x5+x2x3+x1x7+x1x5+x1x4+x1x3+x0x2+x1y7+x2y6+x1y6+x6y5+x2y5+"
    "x2y4+x3y3+x7y2+x3y2+x2y2+x7y1+x5y1+x1y1+x7+x3+x0+y6+y4+y2+y1",
    "x7y5+x7y4+x2y4+x7y3+x6y3+x0y3+x5y2+x4y2+x0y2+x7y1+x3y1+x2y1+x0y1+x7y0+x5y0+x4y0+"
    "x2y0+x1y0+x2+x1+x0+y4+y2+y1+1",
    "x5x6+x3x7+x3x6+x2x5+x2x4+x1x6+x1x5+x1x4+x1x3+x1x2+x0x7+x0x2+x0x1+x5y7+x1y6+x4y4+"
    "x2y4+x0y4+x5y3+x4y3+x1y3+x0y2+x5y1+x2y1+x1y1+x3y0+x0y0+x6+x5+x1+y3+y2",
    "x6y7+x3y7+x1y7+x6y6+x5y6+x1y6+x5y5+x1y5+x6y4+x6y3+x5y3+x4y3+x3y2+x7y1+x6y1+x1y1+"
    "x6y0+x3y0+x2y0+x5+y7+y3+y2+y1+y0",
    "x5x6+x4x6+x3x6+x3x5+x3x4+x1x7+x1x5+x0x3+x0x2+x5y7+x1y6+x6y5+x2y5+x2y4+x0y4+x6y2+"
    "x4y2+x2y2+x1y2+x6y1+x5y1+x4y1+x2y1+x5y0+x3y0+x7+x6+x4+x0+y6+y4+y2+1",
    "x5y7+x4y7+x3y7+x1y7+x0y7+x7y6+x4y6+x7y5+x3y5+x7y4+x4y4+x3y4+x7y3+x6y3+x4y3+x3y3+"
    "x1y3+x6y2+x5y2+x2y2+x2y1+x7y0+x3y0+x2y0+x1y0+y6+y2+y0",
    "x7y7+x4y7+x1y7+x6y6+x5y6+x5y5+x2y3+x1y3+x0y3+x5y2+x4y2+x2y2+x1y2+x7y1+x0y1+x6y0+"
    "x5y0+x4y0+x0y0+x6+x2+x1+x0+y7",
    "x7y7+x4y7+x2y7+x4y6+x6y5+x5y5+x1y5+x6y4+x4y4+x7y3+x6y3+x6y2+x5y2+x0y2+x6y1+x2y1+"
    "x6y0+x4y0+x5+x4+x3+x1+x0+y7+y4+y2",
    "x4x6+x4x5+x3x5+x3x4+x2x7+x2x6+x2x4+x2x3+x1x6+x1x5+x1x4+x1x2+x0x7+x0x6+x0x2+x0x1+"
    "x0y5+x6y4+x3y4+x0y4+x6y3+x3y3+x2y3+x6y2+x5y2+x4y2+x0y2+x7y1+x5y1+x0y0+x7+y1+1",
    "x6y7+y6y7+x7y5+y5y7+x7y4+y4y7+x7y3+x6y3+x2y3+x1y3+y3y5+y3y4+x7y2+x6y2+x0y2+y2y3+"
    "x4y1+x3y1+x2y1+x1y1+x0y1+y1y5+y1y2+x7y0+x1y0+y0y7+y0y6+y0y3+y0y1+x2+y5+y4",
    "x4y7+x3y7+x1y7+x5y6+x4y6+x1y6+x4y5+x0y5+x7y4+x6y4+x4y4+x2y4+x1y4+x5y3+x4y3+x3y3+"
    "x0y3+x3y2+x0y1+x6y0+x1y0+x6+x4+x2+y6+y2+y1",
    "x5x7+x4x7+x2x5+x2x3+x1x7+x1x5+x0x7+x0x6+x0x5+x0x4+x0x3+x4y5+x6y4+x5y3+x4y3+x0y3+"
    "x7y2+x3y2+x2y2+x5y1+x3y1+x0y1+x5y0+x3y0+x0y0+x7+x5+x1+x0+y4+y0+1",
    "x7y7+x4y7+x0y7+x6y6+x5y6+x0y6+x0y5+x6y4+x5y4+x3y4+x7y3+x6y3+x0y3+x7y2+x3y2+x2y2+"
    "x6y1+x3y1+x1y1+x5y0+x4y0+x3y0+x1y0+x3+y3",
    "x4x5+x3x7+x3x6+x3x4+x2x7+x2x5+x2x3+x1x6+x1x4+x1x3+x0x7+x1y7+x2y6+x1y6+x6y5+x2y5+"
    "x4y4+x3y4+x7y3+x3y2+x5y1+x2y1+x0y1+x4y0+x3y0+x0y0+x3+y3+y2+y1+y0",
)
