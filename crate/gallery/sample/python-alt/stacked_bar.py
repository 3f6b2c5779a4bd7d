import altair as alt

cars = "data/cars.csv"

alt.Chart(cars).mark_bar().encode(
    x="origin:N",
    y="count():Q",
    color="cylinders:O",
)
