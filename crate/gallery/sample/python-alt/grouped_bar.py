import altair as alt

cars = "data/cars.csv"

alt.Chart(cars).mark_bar().encode(
    x="origin:N",
    xOffset="cylinders:O",
    y="mean(mpg):Q",
    color="cylinders:O",
)
