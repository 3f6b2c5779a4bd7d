import altair as alt

cars = "data/cars.csv"

alt.Chart(cars).mark_area().encode(
    x="year:O",
    y="sum(weight):Q",
    color="origin:N",
)
