import altair as alt

cars = "data/cars.csv"

alt.Chart(cars).mark_boxplot(extent=1.5).encode(
    x="origin:N",
    y="mpg:Q",
)
