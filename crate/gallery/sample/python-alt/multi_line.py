import altair as alt

cars = "data/cars.csv"

alt.Chart(cars, title="Mean mpg by year").mark_line(point=True).encode(
    x="year:O",
    y=alt.Y("mean(mpg):Q", title="mean mpg"),
    color="origin:N",
)
