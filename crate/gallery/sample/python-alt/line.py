import altair as alt

cars = "data/cars.csv"

alt.Chart(cars).mark_line().encode(
    x="year:O",
    y="mean(mpg):Q",
)
